"""Graded E(n)-modules, resolutions, Tate windows and the linear BGG complex."""
from .modules import *  # noqa: F401,F403
from .resolution import *  # noqa: F401,F403
from .window import *  # noqa: F401,F403
from .bgg import *  # noqa: F401,F403
from . import bgg as _b, modules as _m, resolution as _r, window as _w

__all__ = _m.__all__ + _r.__all__ + _w.__all__ + _b.__all__
