try:
    from ._version import version as __version__
except ImportError:
    # Raw source checkout without a generated _version.py
    __version__ = "0.0.0.unknown"

from .manifest import Manifest


__manifest__ : Manifest = Manifest(
    parent=Manifest.__root_manifest__,
    location=Manifest.Location(module=__name__),
    description="Framelium: Gramians, reproducing kernels and separated partitions of Bessel sequences",
    status=Manifest.Status.Development,
    threadSafety=Manifest.ThreadSafety.ThreadSafe,
    dependencies=[
        Manifest.Dependency(name="numpy", version=">=1.26"),
        Manifest.Dependency(name="scipy", version=">=1.11"),
    ],
    changelog=[ Manifest.Changelog(version="0.1.0", date=Manifest.Date(2025,9,1),
                                   notes=["Initial release: spectral core, sequences, kernels, partitions, CLI"]),
                Manifest.Changelog(version="0.1.1", date=Manifest.Date(2025,9,8),
                                   notes=["Added D(mu) spaces and the |Gamma| to Gamma norm ratio"]),
                Manifest.Changelog(version="0.2.0", date=Manifest.Date(2025,9,22),
                                   notes=["Report document, CSV exports and fixtures"]),
                ],
)

# This manifest is defined as a project manifest. By doing this, this module will become the project root.
__project_manifest__ = __manifest__

# Set the parent manifest for the manifest module
import framelium.manifest.__header__ as manifest_header_module
manifest_header_module.__parent_manifest__ = __manifest__
