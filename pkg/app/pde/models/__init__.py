from .mesh import Mesh  # noqa
from .trajectory import Trajectory  # noqa
from .front_report import FrontReport  # noqa
