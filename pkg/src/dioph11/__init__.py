"""Complete solution of x^2 + 11^(2k) = y^n with auditable elimination certificates."""

__version__ = "0.1.0"
