"""linres: exact construction and verification of generic linear resolutions
of Artinian Gorenstein algebras given by Macaulay inverse systems."""

__version__ = "0.1.0"
