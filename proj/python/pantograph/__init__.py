from ._pantograph import *  # noqa: F401,F403
