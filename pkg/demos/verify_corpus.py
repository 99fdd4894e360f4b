"""Check every catalog family on its default grid and print a per-family tally."""

from __future__ import annotations

from soliton_lab.catalog import enumerate_families, grid_instances, verify_instance


def main() -> None:
    total = failed = 0
    for fam in enumerate_families():
        checks = [ck for inst in grid_instances(fam.id) for ck in verify_instance(inst)]
        bad = [ck for ck in checks if not ck.ok]
        total += len(checks)
        failed += len(bad)
        print(f"{fam.id:<16} {len(checks):>4} checks  {'ok' if not bad else f'{len(bad)} FAILED'}")
    print(f"\n{total} checks, {failed} failed")


if __name__ == "__main__":
    main()
