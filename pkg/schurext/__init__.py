"""
schurext: exact Ext groups between Weyl and Schur functors.

Specialization complexes over Z and F_p, the twisted Koszul calculus on hook
Weyl modules, closed-form Ext series, and short resolution shapes.
"""

__version__ = "0.3.0"
