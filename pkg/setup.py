"""Build script: compiles the optional Cython kernel core.

The package is fully functional without the extension (a pure-Python
twin of the hot kernels is selected at import time), so any failure to
build `etaint._ckernels` is demoted to a warning.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible, otherwise fall back to pure Python."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler/toolchain missing
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "WARNING: could not build the compiled kernel core "
            f"({exc!r}); etaint will use the pure-Python kernels.",
            file=sys.stderr,
        )


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/etaint/_ckernels.pyx"],
        language_level=3,
        compiler_directives={"boundscheck": False, "cdivision": True},
    )
except ImportError:
    print(
        "WARNING: Cython not available; building etaint without the "
        "compiled kernel core.",
        file=sys.stderr,
    )

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
