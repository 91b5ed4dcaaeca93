#!/usr/bin/env python3
"""Rebuild data/uci/*.csv from package-index wheels that bundle the UCI files.

Sources:
  iris         scikit-learn (bundled iris.csv)
  dermatology  imbalanced_databases wheel (KEEL dermatology-6: UCI attributes,
               rows with a missing age removed; the binarised class is kept as label)
  satimage     imbalanced_databases wheel (original sat.trn + sat.tst)
  mfeat        mvlearn wheel (six UCI views concatenated -> 649 features)
  control      regenerated with the generator described in the UCI
               synthetic_control documentation (the dataset is itself synthetic)

Every output file has a header row and a trailing "class" label column.
"""
import argparse
import io
import math
import pathlib
import random
import subprocess
import tempfile
import zipfile


def fetch_wheel(name, workdir):
    subprocess.run(["pip", "download", name, "--no-deps", "-q", "-d", workdir], check=True)
    wheel = next(pathlib.Path(workdir).glob(name.replace("-", "_").split("=")[0] + "-*.whl"))
    return zipfile.ZipFile(wheel)


def write_csv(path, header, rows):
    with open(path, "w", newline="\n") as out:
        out.write(",".join(header) + "\n")
        for row in rows:
            out.write(",".join(row) + "\n")


def iris(outdir):
    import sklearn.datasets
    ds = sklearn.datasets.load_iris()
    header = ["sepal_length", "sepal_width", "petal_length", "petal_width", "class"]
    rows = [["%g" % v for v in x] + [ds.target_names[y]] for x, y in zip(ds.data, ds.target)]
    write_csv(outdir / "iris.csv", header, rows)


def dermatology(wheel, outdir):
    text = wheel.read("imbalanced_databases/data/dermatology-6/dermatology-6.dat").decode()
    header, rows = [], []
    for line in text.splitlines():
        if line.startswith("@attribute"):
            header.append(line.split()[1].lower())
        elif line.strip() and not line.startswith("@"):
            rows.append([c.strip() for c in line.split(",")])
    header[-1] = "class"
    write_csv(outdir / "dermatology.csv", header, rows)


def satimage(wheel, outdir):
    rows = []
    for part in ("sat.trn.txt", "sat.tst.txt"):
        text = wheel.read("imbalanced_databases/data/satimage/" + part).decode()
        rows += [line.split() for line in text.splitlines() if line.strip()]
    header = ["a%d" % i for i in range(1, 37)] + ["class"]
    write_csv(outdir / "satimage.csv", header, rows)


def mfeat(wheel, outdir):
    views = ["fac", "fou", "kar", "mor", "pix", "zer"]
    columns, labels = [], None
    header = []
    for view in views:
        text = wheel.read("mvlearn/datasets/UCImultifeature/mfeat-%s.csv" % view).decode()
        lines = [line.split(",") for line in text.splitlines()[1:] if line.strip()]
        header += ["%s%d" % (view, i) for i in range(len(lines[0]) - 1)]
        columns.append([line[:-1] for line in lines])
        labels = [str(int(float(line[-1]))) for line in lines]
    rows = [sum((view[i] for view in columns), []) + [labels[i]] for i in range(len(labels))]
    write_csv(outdir / "mfeat.csv", header + ["class"], rows)


def control(outdir, seed=1999):
    # 6 classes x 100 series x 60 steps; m=30, s=2, r~U(-3,3)
    rng = random.Random(seed)
    names = ["normal", "cyclic", "increasing", "decreasing", "upward", "downward"]
    rows = []
    for cls, name in enumerate(names):
        for _ in range(100):
            a, period = rng.uniform(10, 15), rng.uniform(10, 15)
            g, x, t3 = rng.uniform(0.2, 0.5), rng.uniform(7.5, 20), rng.uniform(20, 40)
            series = []
            for t in range(1, 61):
                y = 30 + 2 * rng.uniform(-3, 3)
                if name == "cyclic":
                    y += a * math.sin(2 * math.pi * t / period)
                elif name == "increasing":
                    y += g * t
                elif name == "decreasing":
                    y -= g * t
                elif name == "upward":
                    y += x if t >= t3 else 0.0
                elif name == "downward":
                    y -= x if t >= t3 else 0.0
                series.append("%.4f" % y)
            rows.append(series + [name])
    write_csv(outdir / "control.csv", ["t%d" % t for t in range(1, 61)] + ["class"], rows)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parents[1] / "data" / "uci"))
    args = parser.parse_args()
    outdir = pathlib.Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    with tempfile.TemporaryDirectory() as work:
        imb = fetch_wheel("imbalanced_databases", work)
        mv = fetch_wheel("mvlearn", work)
        iris(outdir)
        dermatology(imb, outdir)
        satimage(imb, outdir)
        mfeat(mv, outdir)
        control(outdir)
    for f in sorted(outdir.glob("*.csv")):
        print(f.name, sum(1 for _ in open(f)) - 1, "rows")


if __name__ == "__main__":
    main()
