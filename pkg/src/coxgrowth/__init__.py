"""Growth functions and growth rates of 3-dimensional hyperbolic Coxeter groups."""

__version__ = "0.1.0"
