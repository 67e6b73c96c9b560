import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("GKZRATIONAL_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("gkzrational._speedups",
                       ["src/gkzrational/_speedups.pyx"])],
            language_level=3,
        )
    except ImportError:
        # pure-Python install; the kernel selector falls back automatically
        ext_modules = []

setup(ext_modules=ext_modules)
