"""braidpy - exact verification engine for braided SU_q(2) and its quantum spheres."""
__version__ = "0.1.0"
