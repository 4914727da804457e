"""Build script: compiles the eigensolver kernel when a toolchain is present.

The package works without the extension (a pure-Python twin is selected at
import time), so any build failure here only costs speed.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"WARNING: building the compiled kernel failed ({exc!r}); "
              "regspectra will fall back to the pure-Python eigensolver")


def extensions():
    pyx = os.path.join("src", "regspectra", "_spectral.pyx")
    try:
        from Cython.Build import cythonize
    except ImportError:
        c = pyx[:-4] + ".c"
        if os.path.exists(c):
            return [Extension("regspectra._spectral", [c])]
        return []
    return cythonize(
        [Extension("regspectra._spectral", [pyx])],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
