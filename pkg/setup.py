from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = []
if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "quantax.backends._core",
                ["src/quantax/backends/_core.pyx"],
                include_dirs=[numpy.get_include()],
            )
        ],
        language_level="3",
    )

setup(ext_modules=extensions)
