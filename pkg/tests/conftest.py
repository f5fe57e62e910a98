import sys
from pathlib import Path

from hypothesis import HealthCheck, settings

# make helpers.py / strategies.py importable no matter where pytest runs from
sys.path.insert(0, str(Path(__file__).parent))

# exact integer arithmetic makes some single examples slow; wall-clock deadlines
# only add flakiness on loaded machines
settings.register_profile(
    "exact", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("exact")
