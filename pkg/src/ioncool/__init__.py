"""
ioncool

Laser, resistive, sideband, EIT and gradient-assisted cooling of trapped ions:
a quantum-optics toolkit with a batch experiment runner.
"""

__version__ = "0.1.0"

from .core import CoolingLab

__all__ = ["CoolingLab", "__version__"]
