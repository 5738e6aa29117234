"""Put the repository root on sys.path; the modules are flat, not an installed package."""
import sys
from pathlib import Path

ROOT = Path(__file__).parent

if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))
