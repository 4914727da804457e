import os
import sys

# Allow running the suite from a checkout without installing; the compiled
# kernel is then optional and the pure-Python fallback takes over.
try:
    import regspectra  # noqa: F401
except ImportError:  # pragma: no cover
    sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))
