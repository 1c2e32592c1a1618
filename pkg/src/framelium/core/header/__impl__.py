from .__header__ import Header

from typing import Dict, Type
import importlib
import inspect
import threading

import logging
logger = logging.getLogger(__name__)

_impl_cache: Dict[type, type] = {}
_impl_cache_lock = threading.Lock()


class HeaderImpl(Header):
    """
    Implementation class for the Header class.
    """
    __class_type__ = Header.ClassType.Impl

    @classmethod
    def _find_impl(cls, specific_header_cls: Type["Header"]) -> Type["Header"]:
        """
        Find the implementation class for the given specific_header_cls.
        Results are cached; headers are resolved once per process.
        """
        with _impl_cache_lock:
            cached = _impl_cache.get(specific_header_cls)
        if cached is not None:
            return cached

        found = cls._resolve(specific_header_cls)
        with _impl_cache_lock:
            _impl_cache[specific_header_cls] = found
        return found

    @classmethod
    def _resolve(cls, specific_header_cls: Type["Header"]) -> Type["Header"]:
        logger.debug(f"Resolving implementation of {specific_header_cls.__module__}.{specific_header_cls.__name__}")

        # Manual __implementation__ string on the header takes precedence
        explicit_impl_fqn = specific_header_cls.__dict__.get('__implementation__')
        if explicit_impl_fqn:
            if not isinstance(explicit_impl_fqn, str):
                raise TypeError(f"__implementation__ attribute on {specific_header_cls.__name__} must be a string FQN.")
            module_name, class_name = explicit_impl_fqn.rsplit(".", 1)
            try:
                loaded_impl_class = getattr(importlib.import_module(module_name), class_name)
            except (ImportError, AttributeError) as e:
                raise RuntimeError(
                    f"Could not load specified implementation '{explicit_impl_fqn}' for {specific_header_cls.__name__}: {e}"
                )
            if getattr(loaded_impl_class, '__class_type__', None) != Header.ClassType.Impl:
                raise TypeError(
                    f"Explicitly specified implementation class {explicit_impl_fqn} "
                    f"for {specific_header_cls.__name__} is not marked as {Header.ClassType.Impl}."
                )
            if not issubclass(loaded_impl_class, specific_header_cls):
                raise TypeError(
                    f"Explicitly specified implementation class {explicit_impl_fqn} "
                    f"must be a subclass of {specific_header_cls.__name__}."
                )
            return loaded_impl_class

        header_cls_type = specific_header_cls.__dict__.get('__class_type__', Header.ClassType.Header)

        if header_cls_type in (Header.ClassType.Bundle, Header.ClassType.Impl):
            return specific_header_cls

        if header_cls_type != Header.ClassType.Header:
            raise RuntimeError(f"Header {specific_header_cls.__name__} has an undefined __class_type__.")

        # Convention: pkg.__header__ -> pkg.__impl__, pkg.name_h -> pkg.name_impl
        module_parts = specific_header_cls.__module__.split('.')
        stem = module_parts[-1]
        if stem == "__header__":
            target_stem = "__impl__"
        elif stem.endswith("_h"):
            target_stem = stem[:-2] + "_impl"
        else:
            target_stem = None
            logger.warning(
                f"Header class {specific_header_cls.__module__}.{specific_header_cls.__name__} does not live in a "
                f"__header__.py or <name>_h.py module. Searching for the Impl in the same module."
            )
        target_impl_module_fqn = ".".join(module_parts[:-1] + [target_stem]) if target_stem else specific_header_cls.__module__

        found = None
        try:
            imported_module = importlib.import_module(target_impl_module_fqn)
        except ModuleNotFoundError as e:
            if e.name != target_impl_module_fqn:
                raise
            logger.warning(f"Could not import convention-based implementation module: {target_impl_module_fqn}")
            imported_module = None

        if imported_module is not None:
            for _, obj in inspect.getmembers(imported_module, inspect.isclass):
                if (obj is not specific_header_cls and
                        specific_header_cls in obj.__bases__ and
                        obj.__dict__.get('__class_type__') == Header.ClassType.Impl):
                    if found is not None:
                        logger.warning(
                            f"Multiple implementation classes found for {specific_header_cls.__name__} in "
                            f"{target_impl_module_fqn}: {found.__name__} and {obj.__name__}. Using the first one found."
                        )
                    else:
                        found = obj

        if found is None:
            header_class_fqn = f"{specific_header_cls.__module__}.{specific_header_cls.__name__}"
            raise RuntimeError(
                f"Component '{header_class_fqn}' (a Header) requires an Implementation, but none was found.\n"
                f"Convention-based search for an Impl class failed in module '{target_impl_module_fqn}'.\n"
                f"Define a direct subclass of '{specific_header_cls.__name__}' with "
                f"'__class_type__ = Header.ClassType.Impl' there, set '__implementation__', "
                f"or mark '{specific_header_cls.__name__}' as 'Header.ClassType.Bundle'."
            )
        logger.debug(f"  -> {found.__module__}.{found.__name__}")
        return found
