# Placed in tests/core/demo_h.py
from framelium.core.header import Header, HeaderClassType

import logging
logger = logging.getLogger(__name__)

class DemoNorm(Header):
    __class_type__ = HeaderClassType.Header
    # Explicit path: the implementation lives in the tests package, not in a sibling __impl__
    __implementation__ = "tests.core.demo_impl.DemoNormImpl"

    LABEL_HEADER = "Defined in DemoNorm"

    def __init__(self, name: str, order: int, **kwargs):
        super().__init__(name=name, order=order, **kwargs)
        self.name_h = name
        self.order_h = order
        logger.info(f"DemoNorm ({self.__class__.__name__}) __init__ called for {self.name_h}")

    def describe(self):
        return f"{self.name_h}: l^{self.order_h} norm"

    @classmethod
    def label(cls):
        return f"label of {cls.__name__}: {getattr(cls, 'LABEL_HEADER', None)}"
