"""
This module contains the base class for all service headers.

A header declares the public interface of a service class; the implementation
lives in a sibling module and is resolved when the header is instantiated.

Example:

Package structure:

framelium/kernels/__init__.py -> re-exports the header
framelium/kernels/__header__.py -> Header classes (HardySpace, ...)
framelium/kernels/__impl__.py -> Impl classes (HardySpaceImpl, ...)

Inheritance Chain (Parent -> Child):

Header -> HardySpace -> HardySpaceImpl (with __class_type__ = HeaderClassType.Impl)

Importing framelium.kernels loads only the header. `HardySpace()` imports
framelium.kernels.__impl__ and returns a HardySpaceImpl instance.
Small self-contained classes are Bundles: they are their own implementation.
"""

from framelium.core import __manifest__ as __parent_manifest__
from framelium.manifest import Manifest

from abc import ABC, ABCMeta
import enum
from typing import Optional, Type
import functools

import logging
logger = logging.getLogger(__name__)

__manifest__: Manifest = Manifest(
    parent=__parent_manifest__,
    location=Manifest.Location(module=__name__),
    description="Header module",
    status=Manifest.Status.Development,
    threadSafety=Manifest.ThreadSafety.ThreadSafe,
    changelog=[
        Manifest.Changelog(version="0.1.0", date=Manifest.Date(2025,9,1),
                           notes=["Header/Impl resolution by convention, __implementation__ and Bundles"]),
        Manifest.Changelog(version="0.1.1", date=Manifest.Date(2025,9,10),
                           notes=["dlock works on instances as well as classes"]),
    ]
)

class classProperty(object):
    """
    Read-only class property decorator.
    Allows accessing a class method like a property (e.g., `ClassName.property`).
    """
    def __init__(self, fget):
        self.fget = fget

    def __get__(self, obj, owner):
        return self.fget(owner)

def dlock(lock_attr, instance_attr):
    """
    Decorator for thread-safe, lazy initialization using double-checked locking.

    This decorator wraps a *creator* method. It uses attributes on the owner
    (a class for class-level singletons, or an instance for per-object caches)
    for the lock and for caching the created value.
    """
    def decorator(creator_method):
        @functools.wraps(creator_method)
        def wrapper(owner, *args, **kwargs):
            value = getattr(owner, instance_attr, None)
            if value is None:
                lock = getattr(owner, lock_attr)
                with lock:
                    value = getattr(owner, instance_attr, None)  # Double-check
                    if value is None:
                        value = creator_method(owner, *args, **kwargs)
                        setattr(owner, instance_attr, value)
            return value
        return wrapper
    return decorator

class HeaderClassType(enum.Enum):
    """
    Enum for the type of header class.
    """
    Undefined = "undefined"
    Header = "header"
    Impl = "impl"
    Bundle = "bundle" # Bundle is Header + Impl combined

class HeaderMeta(ABCMeta):
    pass


class Header(ABC, metaclass=HeaderMeta):
    """
    Base class for all headers.
    """

    ClassType = HeaderClassType
    Manifest = Manifest

    __manifest__: Manifest = Manifest(
        parent=__manifest__,
        location=Manifest.Location(module=__name__, classname=__qualname__),
        description="Base class for all headers",
        status=Manifest.Status.Development,
        threadSafety=Manifest.ThreadSafety.ThreadSafe,
    )

    __class_type__: HeaderClassType = HeaderClassType.Header

    # Set to a custom implementation class path if required
    # If not set the implementation will be automatically determined
    # by finding a direct child with __class_type__ = HeaderClassType.Impl
    __implementation__: Optional[str] = None

    @classmethod
    def _find_impl(cls_header) -> Optional[Type["Header"]]:
        """
        Find the implementation class for this specific header class (cls_header).
        Delegates the actual search logic to HeaderImpl._find_impl.
        """
        from .__impl__ import HeaderImpl
        return HeaderImpl._find_impl(specific_header_cls=cls_header)

    def __new__(cls, *args, **kwargs):
        actual_class_to_instantiate = cls._find_impl()

        if not actual_class_to_instantiate:
            raise RuntimeError(
                f"Could not find or resolve an implementation for Header class {cls.__name__}. "
                f"Ensure an Impl class is defined by convention, or __implementation__ is set correctly, "
                f"or the class is a Bundle/Impl type."
            )

        return super().__new__(actual_class_to_instantiate)

    def __init__(self, *args, **kwargs):
        # ABC.__init__ (object.__init__) accepts no arguments; subclasses consume their own.
        super().__init__()

    @staticmethod
    def _has_direct_base_subclass(A: type, B: type) -> bool:
        """
        Returns True if A has B (or a subclass of B) as a direct base class.
        """
        try:
            return any(base is B or (isinstance(base, type) and issubclass(base, B)) for base in A.__bases__)
        except AttributeError:
            logger.warning(f"Could not access __bases__ for type {A} during check.")
            return False
