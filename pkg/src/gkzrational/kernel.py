"""Backend selector for the sparse polynomial kernel.

Imports the compiled extension when it is available and not disabled via
the GKZRATIONAL_PURE=1 environment variable; otherwise falls back to the
pure-Python implementation.  Both expose the same functions and produce
bit-identical results.
"""

import os

if os.environ.get("GKZRATIONAL_PURE") == "1":
    from gkzrational._kernel_py import (  # noqa: F401
        KERNEL_NAME,
        add_terms,
        sub_terms,
        scale_terms,
        mul_term,
        mul_terms,
        pow_terms,
        diff_terms,
        sort_key,
        leading_exponent,
        normal_form_terms,
    )
else:
    try:
        from gkzrational._speedups import (  # noqa: F401
            KERNEL_NAME,
            add_terms,
            sub_terms,
            scale_terms,
            mul_term,
            mul_terms,
            pow_terms,
            diff_terms,
            sort_key,
            leading_exponent,
            normal_form_terms,
        )
    except ImportError:
        from gkzrational._kernel_py import (  # noqa: F401
            KERNEL_NAME,
            add_terms,
            sub_terms,
            scale_terms,
            mul_term,
            mul_terms,
            pow_terms,
            diff_terms,
            sort_key,
            leading_exponent,
            normal_form_terms,
        )
