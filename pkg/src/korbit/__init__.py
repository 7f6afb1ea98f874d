from .calculus import *
from .catalog import *
from .closure import *
from .group import *
from .lab import *
from .regular import *
