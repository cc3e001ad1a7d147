"""
Constants and settings for use elsewhere.
"""

import math
import os

import attrs
import platformdirs

APP_NAME = "bateman"

CONFIG_DIR = os.path.join(platformdirs.user_config_dir(), APP_NAME, "")

LOG_DIR = os.path.join(platformdirs.user_log_dir(), APP_NAME, "")

# Orders within this distance of an integer are treated as that integer
ORDER_SNAP_TOL = 1e-12

# Largest alpha + beta accepted by the generalized functions
MAX_WEIGHT_POWER = 60.0


@attrs.frozen
class MathConstants:
    """Mathematical constants used by the closed forms.

    Attributes:
        euler_gamma: The Euler-Mascheroni constant.
        pi: The circle constant.
        sqrt_pi: Square root of pi.
    """

    euler_gamma: float = 0.5772156649015329
    pi: float = math.pi
    sqrt_pi: float = math.sqrt(math.pi)


MATH = MathConstants()


def get_config_dir() -> str:
    """Returns the user config directory, creating it if needed."""
    os.makedirs(CONFIG_DIR, exist_ok=True)
    return CONFIG_DIR


def get_log_dir() -> str:
    """Returns the user log directory, creating it if needed."""
    os.makedirs(LOG_DIR, exist_ok=True)
    return LOG_DIR
