import pathlib
import sys

_here = pathlib.Path(__file__).resolve().parent
# make the golden-data module importable, and the package runnable from a
# bare checkout (an installed quartica takes precedence only if identical)
sys.path.insert(0, str(_here))
_src = _here.parent / "src"
if str(_src) not in sys.path:
    sys.path.insert(0, str(_src))
