from pathlib import Path

from setuptools import find_packages, setup

SETUP_DIRECTORY = Path(__file__).resolve().parent

with (SETUP_DIRECTORY / "README.md").open() as ifs:
    LONG_DESCRIPTION = ifs.read()

install_requires = [
    "numpy>=1.23.3",
    "pandas>=1.5.0",
    "scipy>=1.9.1",
    "sympy>=1.11",
    "networkx>=2.8",
    "tqdm==4.65.0",
]

setup(
    name="korbit",
    version="0.1.0",
    author="korbit contributors",
    description="k-orbits, 2-closures and the polycirculant survey "
    "for small transitive permutation groups",
    long_description=LONG_DESCRIPTION,
    long_description_content_type="text/markdown",
    python_requires=">=3.9",
    packages=find_packages("src"),
    package_dir={"": "src"},
    install_requires=install_requires,
    extras_require={"test": ["pytest>=7.1"]},
    entry_points={"console_scripts": ["korbit=korbit.cli:main"]},
    include_package_data=True,
)
