"""
Generic base class for framelium data objects.
"""

# Standard imports
from enum import Enum

# External imports
from pydantic import BaseModel, ConfigDict


class XObjectStyle(str, Enum):
    """
    Render style of the object
    """
    NONE = "none"
    TREE = "tree"
    TABLE = "table"
    LINEAR = "linear"


class XObjectTypes():
    """
    Types for XObject
    """
    Style = XObjectStyle


class XObject(BaseModel, XObjectTypes):
    """
    Generic base class for framelium data objects.

    Every report, summary and configuration model derives from it, so the CLI
    renderer can treat them uniformly.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    __style__: XObjectStyle = XObjectStyle.NONE

    def __str__(self):
        return self.model_dump_json(indent=2)

    def __repr__(self):
        return f"{self.__class__.__name__}({self.model_dump_json()})"
