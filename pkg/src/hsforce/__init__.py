"""Exact forcing computations for homoclinic orbits of the Smale horseshoe."""
from .symbolic import *  # noqa: F401,F403
from .nbt import NbtCode, check_rational, nbt_code, parse_rational  # noqa: F401
from .orbits import *  # noqa: F401,F403
from .regions import *  # noqa: F401,F403
from .verify import Side, Status, verify_pruning_domain  # noqa: F401
from .verify import Verdict as DomainVerdict  # noqa: F401
from .forcing import *  # noqa: F401,F403
from .report import RunConfig, emit_svg  # noqa: F401

__version__ = "0.1.0"
