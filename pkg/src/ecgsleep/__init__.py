"""Overnight single-lead ECG analytics: sleep phenotyping plus Holter-grade
cardiac phenotyping from EDF recordings, with evaluation and association
tooling."""

__version__ = "0.1.0"
