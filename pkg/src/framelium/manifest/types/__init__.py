"""
Type definitions for the manifest system.
All types are imported and re-exported here for convenient access.
"""

class ManifestTypes():
    from .xobject import XObject
    from .value import ManifestValue as Value, ComplexValue
    Date = Value.Date

    from .location import ManifestLocation as Location
    from .status import ManifestStatus as Status
    from .thread import ManifestThreadSafety as ThreadSafety
    from .changelog import ManifestChangelog as Changelog
    from .dependency import ManifestDependency as Dependency

__all__ = [
    "ManifestTypes"
]
