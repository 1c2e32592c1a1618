from .__header__ import __manifest__, Manifest, Header, HeaderClassType, classProperty, dlock

__all__ = ["__manifest__", "Manifest", "Header", "HeaderClassType", "classProperty", "dlock"]
