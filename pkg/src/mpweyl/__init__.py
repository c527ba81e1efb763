"""mpweyl - exact computations in multiparameter Weyl algebras."""

__version__ = "0.1.0"
