# Note: This is a special case in the header/impl pattern:
# Usually __impl__.py would import from __header__.py, but here it's reversed because
# the header needs the Manifest class to define its own manifest.
from .__impl__ import Manifest


# Root manifest for the manifest system
__root_manifest__ : Manifest = Manifest(
    parent=None,
    location=None,
    description="Root manifest",
    status=Manifest.Status.Development,
    threadSafety=Manifest.ThreadSafety.Immutable,
)

Manifest.__root_manifest__ = __root_manifest__

__parent_manifest__ = None # Special case for the manifest module, set externally (in the project __header__.py)

# Define the manifest module's own manifest (per-module-manifest)
__manifest__ : Manifest = Manifest(
    parent=__root_manifest__,
    location=Manifest.Location(module=__name__),
    description="Per-package metadata: status, thread safety, dependencies, changelog",
    status=Manifest.Status.Development,
    threadSafety=Manifest.ThreadSafety.ThreadSafe,
    dependencies=[
        Manifest.Dependency(name="packaging", version=">=25.0"),
        Manifest.Dependency(name="pydantic", version=">=2.11.4"),
    ],
    changelog=[
        Manifest.Changelog(version="0.1.0", date=Manifest.Date(2025,9,1),
                           notes=["Manifest model with parent/children tree"]),
        Manifest.Changelog(version="0.1.1", date=Manifest.Date(2025,9,8),
                           notes=["Added ComplexValue type with [re, im] JSON encoding"]),
    ]
)

Manifest.__manifest__ = __manifest__
