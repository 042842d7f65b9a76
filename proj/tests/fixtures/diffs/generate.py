#!/usr/bin/env python3
"""Regenerates the unified-diff fixture corpus.

Each case directory holds before/ (baseline tree), patch.diff, and after/
(the tree produced by GNU patch from patch.diff). manifest.json lists the
cases and the tool versions used. Output is deterministic for a fixed seed.
"""
import json
import os
import random
import shutil
import subprocess
import sys
import tempfile

HERE = os.path.dirname(os.path.abspath(__file__))
SEED = 20240917
N_CASES = 60


def c_line(rng):
    k = rng.randrange(1_000_000)
    shapes = [
        "\tval_{k} = compute_{k}(arg_{k});",
        "\tif (flag_{k})",
        "\t\treturn -EINVAL_{k};",
        "\tstruct item_{k} *it_{k} = lookup_{k}(dev);",
        "\tspin_lock(&lock_{k});",
        "\tpr_debug(\"step {k}\\n\");",
        "static int helper_{k}(struct device *dev)",
    ]
    if rng.random() < 0.06:
        return ""
    if rng.random() < 0.05:
        return "}"
    return rng.choice(shapes).format(k=k)


def make_file(rng, n):
    return [c_line(rng) for _ in range(n)]


def mutate(rng, lines):
    out = list(lines)
    n_edits = rng.randint(1, 4)
    # Edit sites spread over the file, applied back to front.
    sites = sorted(rng.sample(range(max(1, len(out))), min(n_edits, max(1, len(out)))), reverse=True)
    for s in sites:
        op = rng.choice(["replace", "insert", "delete", "replace"])
        if op == "replace":
            span = rng.randint(1, 3)
            out[s:s + span] = [c_line(rng) for _ in range(rng.randint(1, 3))]
        elif op == "insert":
            out[s:s] = [c_line(rng) for _ in range(rng.randint(1, 4))]
        else:
            del out[s:s + rng.randint(1, 3)]
    return out


def write_tree(root, files):
    for path, (lines, final_nl) in files.items():
        full = os.path.join(root, path)
        os.makedirs(os.path.dirname(full), exist_ok=True)
        text = "\n".join(lines)
        if lines and final_nl:
            text += "\n"
        with open(full, "w", newline="\n") as f:
            f.write(text)


def unified(path_a, path_b, label_a, label_b, style, rng):
    if style == "git":
        res = subprocess.run(["git", "diff", "--no-index", "--no-color", "--no-ext-diff", "--", path_a, path_b],
                             capture_output=True, text=True)
        out = res.stdout
        # Normalise the directory-qualified names git emits for --no-index.
        out = out.replace("a/" + path_a.lstrip("/"), label_a).replace("b/" + path_b.lstrip("/"), label_b)
        out = out.replace("a/" + path_a, label_a).replace("b/" + path_b, label_b)
        return out
    args = ["diff", "-u", "--label", label_a, "--label", label_b, path_a, path_b]
    if style == "diff-p":
        args.insert(2, "-p")
    res = subprocess.run(args, capture_output=True, text=True)
    return res.stdout


def main():
    rng = random.Random(SEED)
    shutil.rmtree(os.path.join(HERE, "cases"), ignore_errors=True)
    manifest = {"seed": SEED, "cases": []}
    for i in range(N_CASES):
        name = f"{i:03d}"
        case_dir = os.path.join(HERE, "cases", name)
        n_files = 1 if i % 5 else 2
        before, after = {}, {}
        kind = "modify"
        for f in range(n_files):
            path = f"drivers/fix{i:03d}/file{f}.c"
            base = make_file(rng, rng.randint(25, 120))
            final_nl = not (i % 11 == 3 and f == 0)
            before[path] = (base, final_nl)
            after[path] = (mutate(rng, base), final_nl if i % 13 != 7 else not final_nl)
        if i % 17 == 5:
            kind = "create"
            path = f"drivers/fix{i:03d}/new.c"
            after[path] = (make_file(rng, rng.randint(3, 12)), True)
        if i % 19 == 9:
            kind = "delete"
            path = f"drivers/fix{i:03d}/old.c"
            before[path] = (make_file(rng, rng.randint(3, 12)), True)

        style = ["git", "diff", "diff-p"][i % 3]
        with tempfile.TemporaryDirectory() as tmp:
            a_root = os.path.join(tmp, "a")
            b_root = os.path.join(tmp, "b")
            os.makedirs(a_root)
            os.makedirs(b_root)
            write_tree(a_root, before)
            write_tree(b_root, after)
            cwd = os.getcwd()
            os.chdir(tmp)
            try:
                chunks = []
                for path in sorted(set(before) | set(after)):
                    pa = os.path.join("a", path) if path in before else "/dev/null"
                    pb = os.path.join("b", path) if path in after else "/dev/null"
                    la = "a/" + path if path in before else "/dev/null"
                    lb = "b/" + path if path in after else "/dev/null"
                    file_style = style if pa != "/dev/null" and pb != "/dev/null" else "diff"
                    chunks.append(unified(pa, pb, la, lb, file_style, rng))
            finally:
                os.chdir(cwd)
            patch_text = "".join(chunks)

            work = os.path.join(tmp, "work")
            shutil.copytree(a_root, work)
            res = subprocess.run(["patch", "-p1", "--no-backup-if-mismatch", "-s", "-F0", "-d", work],
                                 input=patch_text, capture_output=True, text=True)
            if res.returncode != 0:
                print(f"case {name}: patch failed: {res.stdout}{res.stderr}", file=sys.stderr)
                sys.exit(1)

            os.makedirs(case_dir)
            shutil.copytree(a_root, os.path.join(case_dir, "before"))
            shutil.copytree(work, os.path.join(case_dir, "after"))
            with open(os.path.join(case_dir, "patch.diff"), "w", newline="\n") as f:
                f.write(patch_text)
        manifest["cases"].append({"name": name, "kind": kind, "style": style, "files": n_files})

    patch_version = subprocess.run(["patch", "--version"], capture_output=True, text=True).stdout.splitlines()[0]
    manifest["patch_utility"] = patch_version
    with open(os.path.join(HERE, "manifest.json"), "w") as f:
        json.dump(manifest, f, indent=2, sort_keys=True)
        f.write("\n")


if __name__ == "__main__":
    main()
