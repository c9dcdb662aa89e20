from .prod import *
