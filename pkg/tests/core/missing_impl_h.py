from framelium.core.header import Header

class BergmanSpaceH(Header):
    """A kernel-space header that was declared but never implemented."""
    __class_type__ = Header.ClassType.Header

    def __init__(self, margin: float = 1e-9):
        self.margin = margin
        super().__init__()
