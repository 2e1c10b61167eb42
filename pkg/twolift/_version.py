from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("twolift")
except PackageNotFoundError:
    __version__ = "uninstalled"
