from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension(
        "edge_expand._kernels._ccore",
        ["src/edge_expand/_kernels/_ccore.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": "3"},
    )
)
