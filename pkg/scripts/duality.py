"""Print the matrix of the four basis characters on the standard representatives."""

from braidthom.bns import duality_matrix, duality_representatives
from braidthom.diagrams import characters, format_diagram

NAMES = ("phi0", "phi1", "omega0", "omega1")
REPS = ("x1 x0^-1", "x1^-1", "b1,3", "a1,2")


def main() -> None:
    for word, d in zip(REPS, duality_representatives()):
        print(f"{word:<10} {format_diagram(d):<40} chars={characters(d)}")
    print()
    print(" " * 8 + "".join(f"{w:>10}" for w in REPS))
    for name, row in zip(NAMES, duality_matrix()):
        print(f"{name:<8}" + "".join(f"{v:>10}" for v in row))


if __name__ == "__main__":
    main()
