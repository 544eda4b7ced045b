"""Value sets of fractional ideals of curve singularities as good semigroup ideals."""

__version__ = "0.1.0"
