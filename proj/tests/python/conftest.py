import pathlib
import sys

try:
    import pokerskill  # noqa: F401  (installed wheel takes precedence)
except ImportError:
    root = pathlib.Path(__file__).resolve().parents[2]
    sys.path.insert(0, str(root / "build" / "python"))
