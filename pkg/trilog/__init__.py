"""Three discrete logarithms for compressed SIDH keys, with lookup tables built at runtime."""
__version__ = "0.1.0"
