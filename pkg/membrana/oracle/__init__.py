"""Verificadores independientes: no comparten codigo con las rutas que comprueban."""
from .bessel import bessel_zero
from .ode import integrate_angular, integrate_radial, wronskian
from .schemas import OdeSamples

__all__ = ["OdeSamples", "bessel_zero", "integrate_angular", "integrate_radial", "wronskian"]
