"""deltaforge: exact verification engine for delta-type nonassociative algebras."""

__version__ = "0.1.0"
