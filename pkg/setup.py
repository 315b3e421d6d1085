from setuptools import setup, find_packages

setup(
    name='nfoldlib',
    version='26.10',
    description='Exact computation of torsion classes, n-fold torsion classes and tau-rigid modules '
                'of representation-finite string algebras.',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=['tests', 'tests.*']),
    package_data={'nfoldlib.algebras': ['*.alg']},
    install_requires=open('requirements.txt').read().splitlines(),
    entry_points={'console_scripts': ['taufold = nfoldlib.cli:main']},
    classifiers=[
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: BSD License',
        'Operating System :: OS Independent',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    python_requires='>=3.9',
)
