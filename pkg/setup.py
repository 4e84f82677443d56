"""Setup script for heytingkit."""

from setuptools import setup, find_namespace_packages

setup(
    name="heytingkit",
    version="0.1.0",
    description="Workbench for finite Heyting algebras, enrichments and tilde logics",
    package_dir={"": "src"},
    packages=find_namespace_packages(where="src"),
    install_requires=[
        "numpy>=1.24.0",
        "python-dotenv>=1.0.0",
        "tqdm>=4.0.0",
    ],
    entry_points={
        "console_scripts": [
            "heytingkit=heytingkit.cli:main",
        ]
    },
)
