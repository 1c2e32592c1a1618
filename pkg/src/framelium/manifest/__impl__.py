# Framelium imports
from .types import ManifestTypes

# Standard library imports
from typing import ClassVar, List, Optional, Iterator
import threading

# External imports
from packaging.version import Version
from pydantic import Field, PrivateAttr

# Logging
from logging import getLogger
logger = getLogger(__name__)


class Manifest(ManifestTypes.XObject, ManifestTypes):
    """
    Metadata about a code unit (package, module or class).

    Metadata includes:
    - Description
    - Development status and thread safety
    - Third-party dependencies
    - Changelog (the latest entry defines the version)

    Manifests are hierarchical: every package header creates its manifest with
    the parent package's manifest as `parent`, and service classes create theirs
    with the module manifest as parent. A manifest registers itself with its
    parent on creation, which lets the CLI walk the tree (`framelium info`).
    """

    __manifest__: ClassVar["Manifest"] = None
    __root_manifest__: ClassVar["Manifest"] = None

    location: Optional[ManifestTypes.Location] = Field(default=None, description="Location information for this manifest")
    description: str = Field(default="", description="Description of this manifest")
    status: ManifestTypes.Status = Field(default=ManifestTypes.Status.Development, description="Development status")
    threadSafety: ManifestTypes.ThreadSafety = Field(default=ManifestTypes.ThreadSafety.Unsafe, description="Thread safety level")
    dependencies: List[ManifestTypes.Dependency] = Field(default_factory=list, description="List of dependencies")
    changelog: List[ManifestTypes.Changelog] = Field(default_factory=list, description="List of changelog entries")

    _parent: Optional["Manifest"] = PrivateAttr(default=None)
    _children: List["Manifest"] = PrivateAttr(default_factory=list)
    _children_lock: threading.Lock = PrivateAttr(default_factory=threading.Lock)

    def __init__(self, parent: Optional["Manifest"] = None, **kwargs):
        super().__init__(**kwargs)
        self._parent = parent
        if parent is not None:
            parent._addChild(self)

    def _addChild(self, child: "Manifest") -> None:
        with self._children_lock:
            self._children.append(child)

    @property
    def parent(self) -> Optional["Manifest"]:
        return self._parent

    @property
    def children(self) -> List["Manifest"]:
        """Child manifests, sorted by location for a stable order."""
        with self._children_lock:
            children = list(self._children)
        return sorted(children, key=lambda m: m.location.fqn if m.location else "")

    @property
    def version(self) -> Optional[Version]:
        """Highest version mentioned in the changelog."""
        if not self.changelog:
            return None if self._parent is None else self._parent.version
        return max(entry.parsedVersion for entry in self.changelog)

    def walk(self) -> Iterator["Manifest"]:
        """Depth-first iteration over this manifest and all descendants."""
        yield self
        for child in self.children:
            yield from child.walk()

    def getManifest(self, path: str) -> Optional["Manifest"]:
        """Find a descendant by its short dotted name (e.g. 'framelium.kernels')."""
        if not path:
            return self
        for manifest in self.walk():
            if manifest.location is not None and manifest.location.fqnShort == path:
                return manifest
        logger.debug(f"No manifest found for path '{path}'")
        return None

    def allDependencies(self) -> List[ManifestTypes.Dependency]:
        """Dependencies of this manifest and its descendants, deduplicated by name."""
        seen = {}
        for manifest in self.walk():
            for dep in manifest.dependencies:
                seen.setdefault(dep.name, dep)
        return [seen[name] for name in sorted(seen)]

    def __str__(self):
        name = self.location.fqnShort if self.location else "/"
        return f"{name} [{self.status}, {self.threadSafety}] {self.description}"

    def __hash__(self):
        return id(self)

    def __eq__(self, other) -> bool:
        return self is other
