"""Build the optional compiled kernel extension. If Cython or a C compiler
is unavailable the install still succeeds and the package runs on the
pure-Python kernels."""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            print(f"skipping compiled kernels: {exc}", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"skipping compiled kernels: {exc}", file=sys.stderr)


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/ramseylb/_ckernels.pyx"], language_level=3
    )
except ImportError as exc:
    print(f"skipping compiled kernels: {exc}", file=sys.stderr)
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
