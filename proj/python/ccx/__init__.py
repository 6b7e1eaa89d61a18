from ._ccx import *  # noqa: F401,F403
