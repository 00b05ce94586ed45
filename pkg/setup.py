"""Build script: compile the optional enumeration kernels.

The extension is a pure speedup; if Cython or a C compiler is missing,
or compilation fails for any reason, the install proceeds and the
package falls back to the pure-Python kernels at import time.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as err:
            print(f"skipping compiled kernels ({err}); pure-Python backend will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as err:
            print(f"skipping {ext.name} ({err}); pure-Python backend will be used")


ext_modules = []
if not os.environ.get("QTORIC_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/qtoric/_kernels.pyx"], language_level=3
        )
    except Exception as err:
        print(f"kernel build skipped ({err}); pure-Python backend will be used")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
