"""
The 'stringindec' package lists the indecomposable modules of representation-finite string algebras.

Main Features:
    - Strings as walks through arrows and inverse arrows (StringWord).
    - Enumeration of strings with band rejection (enumerate_strings).
    - String modules (string_module).
    - The catalog of indecomposables with Hom, Ext and translate tables (build_catalog, IndecCatalog).
    - Completeness audit over extension middle terms (audit_catalog).
"""
from .string_word import StringWord
from .enumerate_strings import enumerate_strings
from .string_module import string_module
from .catalog import IndecCatalog
from .build_catalog import build_catalog
from .build_catalog import audit_catalog
