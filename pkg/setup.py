from setuptools import Extension, setup

# The Jacobi sweep kernel is optional: without Cython the package installs
# with the pure-Python fallback selected at import.
try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [Extension("gwspectra._jacobi", ["src/gwspectra/_jacobi.pyx"])],
        language_level="3",
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
