"""Rest-frame instant-form dynamics for N charged scalar particles plus the
transverse electromagnetic field, with nilpotent-charge regularization."""

__version__ = "0.1.0"
