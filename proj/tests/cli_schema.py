"""Runs every subcommand in --json mode and validates the output against the schema."""
import json
import subprocess
import sys

import jsonschema

oh, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

CORPUS = [
    (["--h", "x^2", "normalize"], 0),
    (["--h", "2*x^3 + 6*x^2 + 6*x + 2", "normalize"], 0),
    (["--h", "x^2", "aut"], 0),
    (["--h", "x^3 - x", "aut"], 0),
    (["--h", "x^5 + x^2", "aut"], 0),
    (["--h", "x^2", "mul", "t", "x^2"], 0),
    (["--h", "x^2 + 1", "comm", "t^2", "x"], 0),
    (["--h", "x^2", "apply", "--rho", "sigma(x^2);tau(2)", "x*t + 1"], 0),
    (["--h", "x^2", "apply", "--rho", "sigma(x);tau(sym)", "x*t + 1"], 0),
    (["--h", "x^3 - x", "apply", "--rho", "tau(sym)", "t"], 0),
    (["--h", "x^2", "power", "--rho", "sigma(x);tau(2)", "5"], 0),
    (["--h", "x^3", "conjugate", "--rho", "sigma(x^2 + 2);tau(1)", "--D", "deriv(H=x*t)"], 0),
    (["--h", "x^2", "decompose", "--Dx", "0", "--Dt", "x^2"], 0),
    (["--h", "x^2", "decompose", "--Dx", "x", "--Dt", "t"], 0),
    (["--h", "x^2", "decompose", "--Dx", "x", "--Dt", "0"], 1),
    (["--h", "x^2", "isotropy", "check", "--D", "deriv(w=-x, H=t, s=0)", "--rho", "sigma(x^2);tau(2)"], 0),
    (["--h", "x^2", "isotropy", "check", "--D", "deriv(w=-x, H=t, s=0)", "--rho", "tau(3)"], 1),
    (["--h", "x^3", "isotropy", "describe", "--D", "deriv(w=t + x)"], 0),
    (["--h", "x^2", "isotropy", "describe", "--D", "deriv(w=-x, H=t)"], 0),
    (["--h", "x", "isotropy", "describe", "--D", "deriv(w=t^2 + 2*x*t + x^2 + x)"], 0),
    (["--h", "x^3 + x + 1", "isotropy", "describe", "--D", "deriv(s=1)", "--rdeg-bound", "2"], 0),
    (["--h", "x^2", "isotropy", "describe", "--D", "deriv(w=x^64*t)", "--order-bound", "4"], 1),
    (["lnd", "exp", "x^2 - 1"], 0),
    (["--h", "x^2", "mul", "t*(", "x"], 2),
    (["--h", "x^2", "isotropy", "check", "--D", "deriv(w=x)"], 2),
    (["selftest"], 0),
]

failures = 0
for args, code in CORPUS:
    proc = subprocess.run([oh, "--json", *args], capture_output=True, text=True)
    try:
        doc = json.loads(proc.stdout)
        validator.validate(doc)
        if proc.returncode != code:
            raise ValueError(f"exit {proc.returncode}, expected {code}")
        if doc["ok"] != (code == 0):
            raise ValueError("ok flag disagrees with exit code")
    except Exception as e:  # noqa: BLE001
        failures += 1
        print(f"FAIL {' '.join(args)}: {e}\n  {proc.stdout}{proc.stderr}")
print(f"{len(CORPUS) - failures}/{len(CORPUS)} outputs valid")
sys.exit(1 if failures else 0)
