# __version__ = "0.1.0"
from .Engine.engine_solver import solve
from .GraphCore.graph_basic import build_graph
from .user.instance_stack import LcolStack


# only load magics if in ipython environment
try:
    get_ipython()
    from .magics import lcol_magics
except NameError:
    pass
