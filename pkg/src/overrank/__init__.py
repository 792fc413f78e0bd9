"""M2-rank statistics of overpartitions: exact counts, q-series, modular checks, asymptotics."""

__version__ = "0.1.0"
