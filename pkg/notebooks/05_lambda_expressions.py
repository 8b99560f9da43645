# %% [markdown]
# # Weight expressions
# Weights are written in a small language: numbers, r, + - * /, integer
# powers and exp, sin, ln.

# %%
from bohrradius import LambdaSyntaxError, check_nonnegative, eval_lambda, parse_lambda, to_source

lam = parse_lambda("r * exp(r) / ((1 - r)^2)")
print(lam)
print(to_source(lam), eval_lambda(lam, 0.5))

# %% errors point at the offending character
for bad in ("foo(r)", "(r", "r^1.5"):
    try:
        parse_lambda(bad)
    except LambdaSyntaxError as exc:
        print(exc)
        print(exc.caret())

# %% negative weights are caught before they reach a solver
print(check_nonnegative(parse_lambda("r-1/2")).to_dict())
