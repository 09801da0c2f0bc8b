"""Build the optional compiled kernel.

The package is pure Python plus one Cython speedup module for the integer
matrix kernels.  If the extension cannot be built the install still succeeds
and the package falls back to the pure-Python kernels at import time.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Tolerate a missing compiler: the pure kernels are always available."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - depends on toolchain
            print(f"warning: skipping compiled kernels ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - depends on toolchain
            print(f"warning: skipping {ext.name} ({exc})")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("affineflags._speedups", ["src/affineflags/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:  # pragma: no cover - cython not installed
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": OptionalBuildExt})
