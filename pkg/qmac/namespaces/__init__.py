from .core import Core

__all__ = ['Core']
