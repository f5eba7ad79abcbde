"""The identities as verifiable cases."""

from .classical import *  # noqa: F401,F403
from .registry import CASES, Grid, IdentityCase, VerificationReport, get_case, verify  # noqa: F401
from .families import *  # noqa: F401,F403
