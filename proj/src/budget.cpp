#include "pokerskill/budget.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace pokerskill {

using nlohmann::json;

const char* to_string(Ruling r) {
  switch (r) {
    case Ruling::BetAllowed: return "BET allowed";
    case Ruling::BetOrCheckRaise: return "BET or CHECK-RAISE";
    case Ruling::CheckForced: return "CHECK";
    case Ruling::PolarizedBluffOrCheck: return "POLARIZED BET (bluff) or CHECK or BLOCK BET";
    case Ruling::DefendAllowed: return "CALL or RAISE allowed";
    case Ruling::FoldForced: return "FOLD";
  }
  return "?";
}

std::string budget_num(double v) {
  double r = std::round(v * 10) / 10;
  if (std::abs(r - std::round(r)) < 1e-9) {
    long long n = static_cast<long long>(std::llround(r));
    return std::to_string(n);
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", r);
  return buf;
}

std::string signed_budget_num(double v) {
  double r = std::round(v * 10) / 10;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%+.1f", r);
  return buf;
}

namespace {

json g_tables;
bool g_loaded = false;

const json& tables() {
  if (!g_loaded) {
    const char* env = std::getenv("POKERSKILL_DATA_DIR");
    std::string dir = env ? env : POKERSKILL_DEFAULT_DATA_DIR;
    load_budget_tables(dir + "/tables");
  }
  return g_tables;
}

const char* pot_key(PotType p) {
  switch (p) {
    case PotType::Limp: return "limp";
    case PotType::SRP: return "srp";
    case PotType::ThreeBet: return "3bp";
    case PotType::FourBetPlus: return "4bp";
  }
  return "srp";
}

std::pair<double, double> as_pair(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

double lerp(double a, double b, double t) { return a + (b - a) * t; }

// Position of a class on the reclassification ladder used by the
// "drop N levels" texture penalties.
int ladder_pos(MadeClass c) {
  switch (c) {
    case MadeClass::Overpair: return 0;
    case MadeClass::TopPair: return 1;
    case MadeClass::SecondPair: return 2;
    case MadeClass::ThirdPair: return 3;
    case MadeClass::FourthFifthPair: return 4;
    case MadeClass::WeakShowdown: return 5;
    default: return 6;
  }
}

// Base ATT/DEF for an integer ladder position, using the hand's own kicker
// and pocket-pair details against the target class's table cells.
std::pair<double, double> ladder_value(int pos, const HandClassification& cls,
                                       const BudgetContext& ctx, const json& t) {
  std::string pk = pot_key(ctx.pot);
  if (pk == "limp") pk = "srp";  // limp pots share the SRP rows
  switch (pos) {
    case 0: {
      const json& table = t.at("overpair").at(pk);
      static const char* names[] = {"T", "J", "Q", "K", "A"};
      std::string key = "other";
      if (cls.pair_rank >= 8) key = names[cls.pair_rank - 8];
      if (!table.contains(key)) key = "other";
      return as_pair(table.at(key));
    }
    case 1: {
      const json& rows = t.at("top_pair").at(pk);
      int idx = std::max(1, cls.kicker_tier) - 1;
      idx = std::min<int>(idx, static_cast<int>(rows.size()) - 1);
      return as_pair(rows.at(idx));
    }
    case 2: {
      const json& table = t.at("second_pair").at(pk);
      std::string key = cls.pocket_pair ? "pocket"
                      : cls.kicker_tier == 1 ? "top"
                      : cls.kicker_tier == 2 ? "2nd"
                      : cls.kicker_tier == 3 ? "3rd"
                                             : "other";
      if (!table.contains(key)) key = "other";
      return as_pair(table.at(key));
    }
    case 3: {
      const json& table = t.at("third_pair");
      if (pk == "srp") {
        bool top = cls.pocket_pair || cls.kicker_tier == 1;
        return as_pair(table.at("srp").at(top ? "top" : "other"));
      }
      double def = table.at(pk == "3bp" ? "3bp_def" : "4bp_def").get<double>();
      double att = cls.pocket_pair ? 0.0 : table.at("board_hit_att").get<double>();
      return {att, def};
    }
    case 4: {
      const json& table = t.at("fourth_fifth_pair");
      bool fifth = cls.board_overcards >= 4;
      if (pk == "srp") return as_pair(table.at("srp").at(fifth ? "5th" : "4th"));
      double def = table.at(pk == "3bp" ? "3bp_def" : "4bp_def").get<double>();
      double att = cls.pocket_pair ? 0.0 : table.at("board_hit_att").get<double>();
      return {att, def};
    }
    case 5:
      return as_pair(t.at("weak_showdown").at(pk));
    default:
      return {t.at("trash").at("att").get<double>(), t.at("trash").at("def").get<double>()};
  }
}

struct TexDrops {
  double flush = 0;     // levels, from the flush-danger family
  double straight = 0;  // levels, from the straight-danger family
  std::string flush_name, straight_name;
};

int street_idx(Street s) {
  return s == Street::Flop ? 0 : s == Street::Turn ? 1 : 2;
}

// Flush-family and straight-family drops, with the no-stacking rule: the
// more severe member of each family wins.
TexDrops texture_drops(const BoardTexture& tex, Street street, const json& t) {
  TexDrops out;
  const json& d = t.at("level_drops");
  int si = street_idx(street);
  bool ocf = tex.suit_label == SuitLabel::OneCardFlush;
  bool fp = tex.suit_label == SuitLabel::Monotone || tex.suit_label == SuitLabel::FlushPossible;
  if (ocf) {
    out.flush = d.at("one_card_flush").get<double>();
    out.flush_name = "one_card_flush";
  } else if (fp) {
    out.flush = d.at("flush_possible").at(si).get<double>();
    out.flush_name = "flush_possible";
  }
  if (tex.straight.kind == StraightKind::OneCardStraight) {
    bool open = tex.straight.open_ended;
    out.straight = d.at(open ? "ocs_open" : "ocs_gutshot").get<double>();
    out.straight_name = open ? "one_card_straight_open" : "one_card_straight_gutshot";
  } else if (tex.straight.kind == StraightKind::StraightPossible) {
    bool multi = tex.straight.two_card_combos >= 2;
    out.straight = d.at(multi ? "straight_multi" : "straight_one").at(si).get<double>();
    out.straight_name = multi ? "straight_possible_multi" : "straight_possible_one";
  }
  return out;
}

BudgetValue unlimited() { return {true, 0}; }
BudgetValue finite(double v) { return {false, std::max(0.0, v)}; }

const char* draw_key(DrawClass d) { return to_string(d); }

std::pair<double, double> special_board_pair(const HandClassification& cls,
                                             const BudgetContext& ctx, const json& t,
                                             bool& is_unlimited) {
  const json& sp = t.at("special");
  is_unlimited = false;
  std::string pk = pot_key(ctx.pot);
  if (pk == "limp") pk = "srp";
  switch (cls.special_board) {
    case SpecialBoard::TripsBoard:
      if (cls.made_class == MadeClass::Nuts) { is_unlimited = true; return {0, 0}; }
      if (cls.special_tier == 1) return as_pair(sp.at("trips_board").at("nut_kicker"));
      if (cls.special_tier == 2) return as_pair(sp.at("trips_board").at("second_kicker"));
      return as_pair(sp.at("trips_board").at("lower"));
    case SpecialBoard::DoublePaired:
      if (cls.made_class == MadeClass::Nuts) { is_unlimited = true; return {0, 0}; }
      if (cls.made_class == MadeClass::Set)
        return as_pair(sp.at("double_paired").at("lower_full_house"));
      if (cls.made_class == MadeClass::Flush || cls.made_class == MadeClass::Straight)
        return as_pair(sp.at("double_paired").at("flush_straight"));
      return as_pair(t.at("weak_showdown").at(pk));
    case SpecialBoard::QuadsBoard:
      if (cls.special_tier == 1) { is_unlimited = true; return {0, 0}; }
      if (cls.special_tier == 2) return as_pair(sp.at("quads_board").at("second_high"));
      if (cls.special_tier == 3) return as_pair(sp.at("quads_board").at("third_high"));
      return as_pair(sp.at("quads_board").at("lower"));
    case SpecialBoard::FullHouseBoard:
      if (cls.made_class == MadeClass::Nuts) { is_unlimited = true; return {0, 0}; }
      return as_pair(t.at("weak_showdown").at(pk));
    case SpecialBoard::BoardFlush: {
      if (cls.made_class == MadeClass::Nuts) { is_unlimited = true; return {0, 0}; }
      if (cls.special_tier >= 90) return as_pair(sp.at("board_flush").at("no_suited_card"));
      auto [a2, d2] = as_pair(sp.at("board_flush").at("second"));
      double step = sp.at("board_flush").at("tier_step").get<double>();
      double att = std::max(0.0, a2 - step * (cls.special_tier - 2));
      double def = std::max(1.5, d2 - step * (cls.special_tier - 2));
      return {att, def};
    }
    case SpecialBoard::BoardStraight:
      if (cls.special_tier == 1) return as_pair(sp.at("board_straight").at("improves"));
      return as_pair(sp.at("board_straight").at("shared"));
    default:
      return {0, 0};
  }
}

// Flush, straight, set, trips, two-pair: texture-keyed tables with the
// straight-combo deltas already folded in.
std::pair<double, double> strong_made_pair(const HandClassification& cls,
                                           const BudgetContext& ctx, const json& t,
                                           bool& is_unlimited) {
  is_unlimited = false;
  const BoardTexture& tex = ctx.texture;
  bool paired = tex.pair_structure == PairStructure::Paired;
  bool three_flush = tex.suit_label == SuitLabel::Monotone ||
                     tex.suit_label == SuitLabel::FlushPossible;
  bool four_flush = tex.suit_label == SuitLabel::OneCardFlush;
  bool ocs = tex.straight.kind == StraightKind::OneCardStraight;
  int combos = tex.straight.two_card_combos;

  switch (cls.made_class) {
    case MadeClass::Nuts:
      is_unlimited = true;
      return {0, 0};
    case MadeClass::Flush: {
      const json& f = t.at("flush");
      if (four_flush || tex.board_flush) {
        if (cls.flush_rank_tier == 1 && !paired) { is_unlimited = true; return {0, 0}; }
        if (paired && cls.flush_rank_tier == 1)
          return as_pair(f.at("one_card_paired_nut"));
        const json& rows = f.at("one_card");
        int idx = std::min<int>(std::max(2, cls.flush_rank_tier) - 2,
                                static_cast<int>(rows.size()) - 1);
        auto [a, d] = as_pair(rows.at(idx));
        if (paired) {
          double delta = f.at("one_card_paired_delta").get<double>();
          a += delta;
          d += delta;
        }
        return {std::max(0.0, a), std::max(0.0, d)};
      }
      bool nut = cls.flush_rank_tier == 1;
      bool big = cls.flush_rank >= 8;  // high card above 9
      if (paired) {
        const json& p = f.at("three_flush").at("paired");
        return as_pair(p.at(nut ? "nut" : big ? "big" : "small"));
      }
      if (nut) { is_unlimited = true; return {0, 0}; }
      return as_pair(f.at("three_flush").at(big ? "big" : "small"));
    }
    case MadeClass::Straight: {
      const json& s = t.at("straight");
      std::pair<double, double> base;
      if (cls.two_card_straight) {
        const json& tc = s.at("two_card");
        if (four_flush) base = as_pair(tc.at("four_flush"));
        else if (three_flush) base = as_pair(tc.at("three_flush"));
        else base = as_pair(tc.at("no_flush"));
        if (paired) {
          if (cls.top_end && !three_flush && !four_flush)
            base = as_pair(tc.at("paired_nut_no_flush"));
          else {
            double delta = tc.at("paired_delta").get<double>();
            base.first += delta;
            base.second += delta;
          }
        }
      } else {
        const json& oc = cls.top_end ? s.at("one_card_top") : s.at("one_card_low");
        if (four_flush) base = as_pair(oc.at("four_flush"));
        else if (three_flush) base = as_pair(oc.at("three_flush"));
        else if (cls.top_end) { is_unlimited = true; return {0, 0}; }
        else base = as_pair(oc.at("no_flush"));
        if (paired) {
          double delta = s.at("one_card_paired_delta").get<double>();
          base.first += delta;
          base.second += delta;
        }
      }
      return {std::max(0.0, base.first), std::max(0.0, base.second)};
    }
    case MadeClass::Set: {
      const json& s = t.at("set");
      if (ocs) {
        bool multi = tex.straight.one_card_types >= 2;
        auto [a, d] = as_pair(s.at(multi ? "ocs_multi" : "ocs_one"));
        if (four_flush) return as_pair(s.at("ocs_four_flush"));
        if (three_flush) {
          double delta = s.at("ocs_three_flush_delta").get<double>();
          a += delta;
          d += delta;
        }
        return {std::max(0.0, a), std::max(0.0, d)};
      }
      if (four_flush) return as_pair(s.at("four_flush"));
      if (three_flush) {
        auto [a, d] = as_pair(s.at("three_flush"));
        double delta = s.at("straight_combo_delta").get<double>() * combos;
        return {std::max(0.0, a + delta), std::max(0.0, d + delta)};
      }
      if (combos >= 3) return as_pair(s.at("two_card_3plus"));
      if (combos == 2) return as_pair(s.at("two_card_2"));
      if (combos == 1) return as_pair(s.at("two_card_1"));
      is_unlimited = true;  // no flush, no straight possibility
      return {0, 0};
    }
    case MadeClass::Trip: {
      const json& tr = t.at("trip");
      double k = std::max(0, cls.kicker_rank) / 12.0;  // 2 -> 0, A -> 1
      if (ocs) {
        bool multi = tex.straight.one_card_types >= 2;
        const json& row = tr.at(multi ? "ocs_multi" : "ocs_one");
        double a = lerp(row.at("att_lo").get<double>(), row.at("att_hi").get<double>(), k);
        double d = row.at("def").get<double>();
        if (four_flush) return as_pair(tr.at("ocs_four_flush"));
        if (three_flush) {
          double delta = tr.at("ocs_three_flush_delta").get<double>();
          a += delta;
          d += delta;
        }
        return {std::max(0.0, a), std::max(0.0, d)};
      }
      if (four_flush) return as_pair(tr.at("four_flush"));
      const json& row = tr.at(three_flush ? "three_flush" : "dry");
      double a = lerp(row.at("att_lo").get<double>(), row.at("att_hi").get<double>(), k);
      double d = row.at("def").get<double>();
      double delta = tr.at("straight_combo_delta").get<double>() * combos;
      return {std::max(0.0, a + delta), std::max(0.0, d + delta)};
    }
    case MadeClass::TwoPair: {
      const json& tp = t.at("two_pair");
      if (four_flush && ocs) return as_pair(tp.at("ocf_ocs"));
      if (four_flush) return as_pair(tp.at("ocf"));
      bool multi = tex.straight.one_card_types >= 2;
      if (ocs && three_flush)
        return as_pair(tp.at("ocs_three_flush").at(multi ? "multi" : "one"));
      if (ocs) return as_pair(tp.at("ocs").at(multi ? "multi" : "one"));
      int rank = std::min(10, std::max(1, cls.kicker_tier));
      std::pair<double, double> base;
      if (three_flush) {
        const json& row = tp.at("three_flush");
        double u = (rank - 1) / 9.0;  // rank 1 -> strongest
        base = {lerp(row.at("att_r1").get<double>(), row.at("att_r10").get<double>(), u),
                lerp(row.at("def_r1").get<double>(), row.at("def_r10").get<double>(), u)};
      } else {
        base = as_pair(tp.at("dry").at(rank - 1));
      }
      double delta = tp.at("straight_combo_delta").get<double>() * combos;
      return {std::max(0.0, base.first + delta), std::max(0.0, base.second + delta)};
    }
    default:
      return {0, 0};
  }
}

}  // namespace

void load_budget_tables(const std::string& tables_dir) {
  std::string path = tables_dir + "/budgets.json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open budget tables: " + path);
  try {
    g_tables = json::parse(in);
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed budget tables " + path + ": " + e.what());
  }
  g_loaded = true;
}

bool budget_tables_loaded() { return g_loaded; }

BudgetPair compute_budget(const HandClassification& cls, const BudgetContext& ctx) {
  const json& t = tables();
  BudgetPair out;
  bool unl = false;
  double att = 0, def = 0;

  if (cls.special_board != SpecialBoard::None) {
    auto [a, d] = special_board_pair(cls, ctx, t, unl);
    att = a;
    def = d;
    out.trail.emplace_back("special_board_override", 0);
  } else {
    switch (cls.made_class) {
      case MadeClass::Nuts:
      case MadeClass::Flush:
      case MadeClass::Straight:
      case MadeClass::Set:
      case MadeClass::Trip:
      case MadeClass::TwoPair: {
        auto [a, d] = strong_made_pair(cls, ctx, t, unl);
        att = a;
        def = d;
        break;
      }
      case MadeClass::NutsHigh:
      case MadeClass::SecondHigh: {
        const json& hc = t.at(cls.made_class == MadeClass::NutsHigh ? "nuts_high"
                                                                    : "second_high");
        const json& row = hc.at("def").at(pot_key(ctx.pot));
        // Second hole card scales defense inside the configured range.
        double k = std::max(0, cls.kicker_rank) / 12.0;
        att = 0;
        def = lerp(row.at(0).get<double>(), row.at(1).get<double>(), k);
        const BoardTexture& tex = ctx.texture;
        if (tex.suit_label == SuitLabel::OneCardFlush ||
            tex.straight.kind == StraightKind::OneCardStraight) {
          def = 0;
          out.trail.emplace_back("one_card_danger_def_zero", 0);
        } else {
          if (tex.pair_structure == PairStructure::Paired) {
            double mult = hc.at("paired_mult").get<double>();
            def *= mult;
            out.trail.emplace_back("paired_board_def_mult", mult);
          }
          const json& pen = hc.at("penalties");
          int si = street_idx(ctx.street);
          if (tex.suit_label == SuitLabel::Monotone ||
              tex.suit_label == SuitLabel::FlushPossible) {
            double p = pen.at("flush_possible").at(si).get<double>();
            def += p;
            out.trail.emplace_back("flush_possible_penalty", p);
          }
          if (tex.straight.kind == StraightKind::StraightPossible) {
            bool multi = tex.straight.two_card_combos >= 2;
            double p = pen.at(multi ? "straight_multi" : "straight_one").at(si).get<double>();
            def += p;
            out.trail.emplace_back("straight_possible_penalty", p);
          }
          def = std::max(0.0, def);
        }
        break;
      }
      default: {
        // Pair-ladder classes: base cell, then level drops with
        // interpolation, then the paired-board delta.
        int pos = ladder_pos(cls.made_class);
        TexDrops drops = texture_drops(ctx.texture, ctx.street, t);
        bool ocf = ctx.texture.suit_label == SuitLabel::OneCardFlush;
        if (cls.made_class == MadeClass::Overpair && ocf) {
          att = 0;
          auto base = ladder_value(pos, cls, ctx, t);
          def = std::min(0.6, base.second);
          out.trail.emplace_back("overpair_one_card_flush_cap", 0.6);
        } else {
          double x = pos + drops.flush + drops.straight;
          if (!drops.flush_name.empty())
            out.trail.emplace_back(drops.flush_name, -drops.flush);
          if (!drops.straight_name.empty())
            out.trail.emplace_back(drops.straight_name, -drops.straight);
          if (x >= 6) {
            auto tr = ladder_value(6, cls, ctx, t);
            att = tr.first;
            def = tr.second;
          } else {
            int lo = static_cast<int>(std::floor(x));
            double frac = x - lo;
            auto a = ladder_value(lo, cls, ctx, t);
            auto b = frac > 0 ? ladder_value(lo + 1, cls, ctx, t) : a;
            att = lerp(a.first, b.first, frac);
            def = lerp(a.second, b.second, frac);
          }
        }
        if (ctx.texture.pair_structure == PairStructure::Paired) {
          const json& pd = t.at("paired_delta");
          const char* name = to_string(cls.made_class);
          if (pd.contains(name)) {
            double delta = pd.at(name).get<double>();
            att = std::max(0.0, att + delta);
            def = std::max(0.0, def + delta);
            out.trail.emplace_back("paired_board_delta", delta);
          }
        }
        break;
      }
    }
  }

  double base_att_display = att;
  bool has_showdown = cls.made_class != MadeClass::Trash;
  double draw_floor = -1;
  if (cls.draw_class && !unl) {
    const json& df = t.at("draw_att_floor");
    draw_floor = df.at(draw_key(*cls.draw_class)).get<double>();
    if (draw_floor > att) {
      out.trail.emplace_back("draw_att_floor", draw_floor);
    }
    if (has_showdown) {
      double add = t.at("combo_def").at(draw_key(*cls.draw_class)).get<double>();
      def += add;
      out.trail.emplace_back("combo_def_add", add);
    } else {
      out.def_threshold_governed = true;
    }
  }

  if (!unl && has_showdown && !ctx.hero_ip && ctx.street != Street::River &&
      ctx.spr > 0.5) {
    double delta = t.at("position_def_delta").get<double>();
    def = std::max(0.0, def + delta);
    out.trail.emplace_back("oop_made_hand_def", delta);
  }
  if (!unl && ctx.facing_river_reraise) {
    double delta = t.at("river_reraise_def_delta").get<double>();
    def = std::max(0.0, def + delta);
    out.trail.emplace_back("river_reraise_def", delta);
  }

  if (unl) {
    out.att = unlimited();
    out.def = unlimited();
    out.att_reason = "unlimited";
    return out;
  }

  double final_att = att;
  if (draw_floor > att) final_att = draw_floor;
  out.att = finite(final_att);
  out.def = finite(def);
  if (draw_floor > att)
    out.att_reason = budget_num(final_att) + " (base " + budget_num(base_att_display) +
                     ", draw floor " + budget_num(draw_floor) + ")";
  else
    out.att_reason = budget_num(final_att) + " (base " + budget_num(base_att_display) + ")";
  return out;
}

RemainingBudget remaining(const BudgetPair& b, const PressureSummary& p) {
  RemainingBudget out;
  out.att_unlimited = b.att.unlimited;
  out.def_unlimited = b.def.unlimited;
  if (!b.att.unlimited) out.att_rem = b.att.v - p.hero_weighted;
  if (!b.def.unlimited) out.def_rem = b.def.v - p.villain_weighted;
  return out;
}

BudgetVerdict verdict(const BudgetPair& b, const PressureSummary& p,
                      const HandClassification& cls, const BudgetContext& ctx,
                      bool facing_bet) {
  BudgetVerdict out;
  out.rem = remaining(b, p);
  if (!facing_bet) {
    bool river_trash = ctx.street == Street::River &&
                       cls.made_class == MadeClass::Trash && !cls.draw_class;
    if (river_trash) {
      out.ruling = Ruling::PolarizedBluffOrCheck;
    } else if (out.rem.att_unlimited || out.rem.att_rem > 0) {
      out.ruling = Ruling::BetOrCheckRaise;
    } else {
      out.ruling = Ruling::CheckForced;
    }
  } else {
    if (out.rem.def_unlimited || b.def_threshold_governed || out.rem.def_rem > 0)
      out.ruling = Ruling::DefendAllowed;
    else
      out.ruling = Ruling::FoldForced;
  }
  out.reason = to_string(out.ruling);
  return out;
}

}  // namespace pokerskill
