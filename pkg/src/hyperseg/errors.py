"""Exception taxonomy shared by the whole package.

The CLI maps these onto its exit-code contract: usage/config/content
problems exit 2, OS-level I/O failures exit 3, verification failures 1.
"""


class HsegError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(HsegError):
    """Tensor or parameter dimensions do not match an operation's contract."""


class LayoutError(HsegError):
    """A patch grid does not evenly divide the feature map."""


class ConfigError(HsegError):
    """A model configuration violates a structural invariant."""


class ParseError(HsegError):
    """A file does not conform to its declared binary format."""
