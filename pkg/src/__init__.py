"""JetVar - Exact symbolic engine for the variational bicomplex on a trivial bundle."""

__version__ = "0.1.0"
__author__ = "TinhSoftware"
