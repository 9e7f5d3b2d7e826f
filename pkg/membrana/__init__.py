"""membrana: vibraciones de la membrana eliptica por funciones de Mathieu."""

__version__ = "1.0.0"
