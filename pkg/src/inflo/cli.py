"""Command-line interface: build-df, train, label, eval, serve, ingest."""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import classify, corpus, kpminer, mprank, service
from .corpus import Category


def read_config(path: str | None) -> dict[str, str]:
    """key=value lines; '#' starts a comment."""
    if not path:
        return {}
    config: dict[str, str] = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, value = line.partition("=")
        config[key.strip()] = value.strip().strip('"')
    return config


def iter_article_records(path: Path):
    """Yield article objects from a feed JSON file, a JSON-lines file, or a
    directory of either."""
    if path.is_dir():
        for child in sorted(path.iterdir()):
            if child.suffix in (".json", ".jsonl"):
                yield from iter_article_records(child)
        return
    text = path.read_text(encoding="utf-8")
    stripped = text.lstrip()
    if stripped.startswith("{") and '"articles"' in stripped[:2000]:
        try:
            payload = json.loads(text)
            if isinstance(payload, dict) and isinstance(payload.get("articles"), list):
                yield from payload["articles"]
                return
        except json.JSONDecodeError:
            pass
    for line in text.splitlines():
        if line.strip():
            yield json.loads(line)


def load_corpus(path: str) -> list[corpus.Document]:
    docs = []
    for record in iter_article_records(Path(path)):
        docs.append(corpus.ingest(record))
    return docs


def _cmd_build_df(args) -> int:
    docs = load_corpus(args.corpus)
    labeled = [d for d in docs if d.category is not None]
    if not labeled:
        print("no labeled articles in corpus", file=sys.stderr)
        return 1
    if args.use_all:
        selected = labeled
    else:
        train_docs, _, _ = corpus.split(labeled, seed=args.seed)
        selected = train_docs
    if args.boost_after:
        cutoff = datetime.fromisoformat(args.boost_after).replace(tzinfo=timezone.utc)
        selected = corpus.boost_recent(selected, cutoff)
    by_category: dict[Category, list[corpus.Document]] = {}
    for doc in selected:
        by_category.setdefault(doc.category, []).append(doc)
    model_set = corpus.build_model_set(by_category)
    corpus.save_models(model_set, args.out)
    sizes = {c.value: len(v) for c, v in sorted(by_category.items(), key=lambda kv: kv[0].value)}
    print(f"built DF tables for {len(by_category)} categories over "
          f"{len(selected)} documents -> {args.out}")
    print(json.dumps(sizes))
    return 0


def _cmd_train(args) -> int:
    docs = load_corpus(args.corpus)
    labeled = [d for d in docs if d.category is not None]
    if not labeled:
        print("no labeled articles in corpus", file=sys.stderr)
        return 1
    if args.models:
        corpus.load_models(args.models)  # fail fast on a broken DF directory
    train_docs, valid_docs, _ = corpus.split(labeled, seed=args.seed)
    vocab = classify.build_vocab(train_docs, min_df=args.min_df)
    model = classify.train(
        train_docs, vocab, smoothing=args.smoothing, entity_aware=not args.plain_unk
    )
    classify.save_classifier(model, args.out)
    report = classify.evaluate(valid_docs, model) if valid_docs else {"accuracy": None}
    print(f"trained on {len(train_docs)} docs, vocab {len(vocab)} -> {args.out}")
    if report["accuracy"] is not None:
        print(f"validation accuracy {report['accuracy']:.4f}")
    return 0


def _pipeline_params(args) -> service.PipelineParams:
    return service.PipelineParams(
        kp=kpminer.KpParams(
            lasf=args.lasf,
            cutoff=args.cutoff,
            boost_alpha=args.boost_alpha,
            boost_sigma=args.boost_sigma,
            top_k=args.top_k,
        ),
        mp_alpha=args.mp_alpha,
        mp_damping=args.mp_damping,
        mp_threshold=args.mp_threshold,
        top_k=args.top_k,
        max_tags=args.max_tags,
    )


def _cmd_label(args) -> int:
    from .api import label_result_json

    models = corpus.load_models(args.models)
    clf = classify.load_classifier(args.model)
    if args.input == "-":
        text = sys.stdin.read()
    else:
        text = Path(args.input).read_text(encoding="utf-8")
    title, body = "", text
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            record = json.loads(text)
            title = record.get("title") or ""
            body = record.get("content") or record.get("description") or record.get("body") or ""
        except json.JSONDecodeError:
            pass
    doc = corpus.build_document(title=title, body=body)
    result = service.label_pipeline(doc, models, clf, _pipeline_params(args))
    json.dump(label_result_json(result), sys.stdout, indent=2, sort_keys=True)
    print()
    return 0


def _cmd_eval(args) -> int:
    clf = classify.load_classifier(args.model)
    docs = load_corpus(args.test)
    labeled = [d for d in docs if d.category is not None]
    report = classify.evaluate(labeled, clf)
    print(json.dumps(report, indent=2, sort_keys=True))
    return 0


def build_server(args, config: dict[str, str]):
    """Resolve flags against the config file and assemble the app.

    Flags win over config keys (models_dir, classifier, store, bind,
    static_dir). Returns (app, engine, host, port).
    """
    from .api import create_app
    from .store import ArticleStore

    models_dir = args.models or config.get("models_dir")
    classifier_path = args.model or config.get("classifier")
    store_path = args.store or config.get("store")
    models = corpus.load_models(models_dir) if models_dir else None
    clf = classify.load_classifier(classifier_path) if classifier_path else None
    store = ArticleStore(store_path)
    engine = service.Engine(
        models, clf, store, params=_pipeline_params(args), prelabel=args.prelabel
    )
    static_dir = args.static or config.get("static_dir")
    app = create_app(engine, static_dir=static_dir)
    bind = args.bind or config.get("bind", "127.0.0.1:8080")
    host, _, port = bind.partition(":")
    return app, engine, host or "127.0.0.1", int(port or 8080)


def _cmd_serve(args, config: dict[str, str]) -> int:
    import uvicorn

    app, _, host, port = build_server(args, config)
    uvicorn.run(app, host=host, port=port, log_level="info")
    return 0


def _cmd_ingest(args, config: dict[str, str]) -> int:
    from .store import ArticleStore

    store = ArticleStore(args.store)
    engine = service.Engine(None, None, store)
    if args.feed:
        payload = json.loads(Path(args.feed).read_text(encoding="utf-8"))
    else:
        if config.get("network", "off") != "on":
            print("network is off; pass --feed or set network=on in config", file=sys.stderr)
            return 1
        url = args.from_url or config.get("feed_url")
        key = args.api_key or config.get("feed_api_key", "")
        if not url:
            print("no feed URL configured", file=sys.stderr)
            return 1
        payload = service.fetch_remote_feed(url, key)
    stored, skipped = engine.ingest_feed(payload)
    print(json.dumps({"stored": stored, "skipped": skipped}))
    return 0


def _add_kp_flags(parser: argparse.ArgumentParser) -> None:
    defaults = kpminer.KpParams()
    parser.add_argument("--lasf", type=int, default=defaults.lasf)
    parser.add_argument("--cutoff", type=int, default=defaults.cutoff)
    parser.add_argument("--boost-alpha", type=float, default=defaults.boost_alpha)
    parser.add_argument("--boost-sigma", type=float, default=defaults.boost_sigma)
    parser.add_argument("--mp-alpha", type=float, default=mprank.PROMOTE_ALPHA)
    parser.add_argument("--mp-damping", type=float, default=mprank.DAMPING)
    parser.add_argument("--mp-threshold", type=float, default=mprank.JACCARD_THRESHOLD)
    parser.add_argument("--top-k", type=int, default=defaults.top_k)
    parser.add_argument("--max-tags", type=int, default=10)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="inflo", description=__doc__)
    parser.add_argument("--config", help="key=value config file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-df", help="build category DF tables from a corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--boost-after", help="double documents published on/after this date")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--use-all", action="store_true",
                   help="compute DF on the full corpus instead of the training split")

    p = sub.add_parser("train", help="train the category classifier")
    p.add_argument("--corpus", required=True)
    p.add_argument("--models", help="DF table directory (validated if given)")
    p.add_argument("--out", required=True)
    p.add_argument("--min-df", type=int, default=2)
    p.add_argument("--smoothing", type=float, default=1.0)
    p.add_argument("--plain-unk", action="store_true",
                   help="collapse all OOV tokens to UNK (ablation baseline)")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("label", help="label one article (file or '-' for stdin)")
    p.add_argument("input")
    p.add_argument("--models", required=True)
    p.add_argument("--model", required=True)
    _add_kp_flags(p)

    p = sub.add_parser("eval", help="evaluate the classifier on a labeled corpus")
    p.add_argument("--model", required=True)
    p.add_argument("--test", required=True)

    p = sub.add_parser("serve", help="run the aggregation HTTP service")
    p.add_argument("--models")
    p.add_argument("--model")
    p.add_argument("--store")
    p.add_argument("--bind", default=None, help="host:port (default 127.0.0.1:8080)")
    p.add_argument("--prelabel", action="store_true")
    p.add_argument("--static", help="directory of built UI assets to serve at /")
    _add_kp_flags(p)

    p = sub.add_parser("ingest", help="ingest a feed file or the remote feed")
    p.add_argument("--store")
    p.add_argument("--feed")
    p.add_argument("--from-url")
    p.add_argument("--api-key")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = read_config(args.config)
    if args.command == "build-df":
        return _cmd_build_df(args)
    if args.command == "train":
        return _cmd_train(args)
    if args.command == "label":
        return _cmd_label(args)
    if args.command == "eval":
        return _cmd_eval(args)
    if args.command == "serve":
        return _cmd_serve(args, config)
    if args.command == "ingest":
        return _cmd_ingest(args, config)
    parser.error(f"unknown command {args.command}")
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
