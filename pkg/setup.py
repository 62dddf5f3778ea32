"""Build with an optional Cython extension.

The compiled kernel module is a speedup, not a requirement: if Cython or a C
compiler is unavailable the build falls back to the pure-Python twin and the
package still works. `MBZETA_SKIP_EXT=1` forces the fallback.
"""
import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"mbzeta: skipping compiled core ({exc!r}); pure-Python backend will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"mbzeta: failed to build {ext.name} ({exc!r}); pure-Python backend will be used")


ext_modules = []
if not os.environ.get("MBZETA_SKIP_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("mbzeta._core", ["src/mbzeta/_core.pyx"])],
            language_level=3,
        )
    except Exception as exc:
        print(f"mbzeta: Cython unavailable ({exc!r}); building without compiled core")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
