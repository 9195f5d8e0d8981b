"""Workbench for finite first-order intuitionistic Kripke models"""

__version__ = "1.0.0"
