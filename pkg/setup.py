import os
from setuptools import setup, find_packages

with open(os.path.join("requirements", "base.txt")) as f:
    requirements = [req.strip() for req in f.readlines()]

with open(os.path.join("requirements", "testing.txt")) as f:
    test_requirements = [req.strip() for req in f.readlines() if not req.startswith('-r')]


setup(
    name='django_vorobev',
    version='0.1.0',
    description="Estimación de la esperanza de Vorob'ev de conjuntos aleatorios sobre grillas diádicas.",
    packages=find_packages(exclude=['conf', 'conf.*']),
    include_package_data=True,
    install_requires=requirements,
    license="MIT license",
    zip_safe=False,
    keywords='django_vorobev vorobev random-sets boolean-model',
    entry_points={
        'console_scripts': [
            'rset=django_vorobev.cli:main',
        ],
    },
    tests_require=test_requirements
)
