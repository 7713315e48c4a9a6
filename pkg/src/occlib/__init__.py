"""occlib: exact verification of cut statistics, odd-cycle-Cayley spectra and
intersecting-family bounds on small graphs and GF(2) vector sets."""

__version__ = "0.1.0"
