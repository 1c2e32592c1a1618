from framelium import __project_manifest__ as __parent_manifest__
from framelium.manifest import Manifest

__manifest__ : Manifest = Manifest(
    parent=__parent_manifest__,
    location=Manifest.Location(module=__name__),
    description="Core services: header/implementation resolution, settings and errors.",
    status=Manifest.Status.Development,
    threadSafety=Manifest.ThreadSafety.ThreadSafe,
    changelog=[
        Manifest.Changelog(version="0.1.0", date=Manifest.Date(2025, 9, 1),
                           notes=["Initial definition of framelium.core package manifest."]),
    ]
)
