import json
from pathlib import Path
from typing import Tuple

import click
from colorama import Fore, init
from loguru import logger
from prettytable import PrettyTable

from Config import (
    DEFAULT_ENUMERATION_CAP, DEFAULT_ITERATIONS, DEFAULT_LOG_LEVEL, DEFAULT_SEED,
    EXIT_FAILURE, EXIT_USAGE, LAW_COST_CAP, VERBOSE_LOG_LEVEL, resolve_cap,
)
from src.cli.render import render_dot
from src.cli.run_config import RunConfig
from src.core import equilibria
from src.dsl import Program, elaborate_game, load_program
from src.finite import render_ports
from src.laws import run_laws
from src.utils.errors import DslError, PregameError

# 初始化彩色输出
init(autoreset=True)


class CommandFailed(Exception):
    """命令失败，携带退出码"""

    def __init__(self, message: str, exit_code: int = EXIT_FAILURE):
        super().__init__(message)
        self.exit_code = exit_code


def _configure_logging(verbose: bool) -> None:
    """日志只写 stderr，stdout 保持可复现"""
    logger.remove()
    logger.add(lambda message: click.echo(message, err=True, nl=False),
               level=VERBOSE_LOG_LEVEL if verbose else DEFAULT_LOG_LEVEL,
               format="{level} | {name}:{line} | {message}\n")


def _load(path: str) -> Tuple[Program, str]:
    try:
        source = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise CommandFailed(f"cannot read {path}: {e}", EXIT_USAGE)
    try:
        return load_program(source, path), source
    except DslError as e:
        raise CommandFailed(e.render(source, path))


def _elaborate(program: Program, source: str, game: str, cap=None):
    if game not in program.environment.games:
        known = ", ".join(program.game_names) or "none"
        raise CommandFailed(f"{program.path}: no game named {game} (declared games: {known})", EXIT_USAGE)
    try:
        return elaborate_game(program, game, cap)
    except DslError as e:
        raise CommandFailed(e.render(source, program.path))


# ========== 各命令的执行逻辑 ==========
def run_check(config: RunConfig) -> None:
    program, source = _load(config.path)
    for name in program.game_names:
        _elaborate(program, source, name, config.cap)
        typed = program.typed_game(name)
        click.echo(Fore.GREEN + f"{name} : {typed.render_type()}")
    logger.info(f"{config.path}：{len(program.game_names)}个博弈检查通过")


def run_equilibria(config: RunConfig) -> None:
    program, source = _load(config.path)
    game = _elaborate(program, source, config.game, config.cap)
    try:
        found = equilibria(game, config.cap)
    except PregameError as e:
        raise CommandFailed(f"{config.game}: {e}")
    if config.output_format == "json":
        click.echo(json.dumps({
            "game": config.game,
            "profiles": [list(sigma) for sigma in found],
            "count": len(found),
        }, ensure_ascii=False))
        return
    names = [c.name for c in game.strategy_components]
    noun = "equilibrium" if len(found) == 1 else "equilibria"
    click.echo(Fore.BLUE + f"📌 {config.game}: {len(found)} {noun} of {game.profile_count()} profiles")
    for sigma in found:
        click.echo("  ".join(f"{n}={label}" for n, label in zip(names, sigma)))


def run_laws_command(config: RunConfig) -> None:
    report = run_laws(config.seed, config.iterations, config.cap or LAW_COST_CAP)
    click.echo(Fore.BLUE + f"📌 laws: seed={report.seed} iterations={report.iterations}")
    table = PrettyTable()
    table.field_names = ["law", "checked", "passed", "resampled", "skipped", "failed"]
    table.align["law"] = "l"
    for outcome in report.outcomes:
        table.add_row([outcome.law, outcome.checked, outcome.passed,
                       outcome.resampled, outcome.skipped, len(outcome.failures)])
    click.echo(table)
    for counterexample in report.failures:
        click.echo(Fore.RED + counterexample.render())
    if not report.ok:
        raise CommandFailed(f"{len(report.failures)} law violations")
    click.echo(Fore.GREEN + "✅ all laws hold")


def run_render(config: RunConfig) -> None:
    program, source = _load(config.path)
    _elaborate(program, source, config.game, config.cap)
    dot = render_dot(program.typed_game(config.game), name=config.game)
    if config.output is None:
        click.echo(dot, nl=False)
        return
    try:
        Path(config.output).write_text(dot, encoding="utf-8")
    except OSError as e:
        raise CommandFailed(f"cannot write {config.output}: {e}", EXIT_USAGE)
    click.echo(Fore.GREEN + f"✅ wrote {config.output}", err=True)


def run_info(config: RunConfig) -> None:
    program, _ = _load(config.path)
    env = program.environment
    table = PrettyTable()
    table.field_names = ["name", "kind", "type"]
    table.align = "l"
    for name, finset in env.sets.items():
        table.add_row([name, "set", "{" + ", ".join(finset.elements) + "}"])
    for name, f in env.funs.items():
        table.add_row([name, "fun", f"{render_ports(f.dom)} -> {render_ports(f.cod)}"])
    for name, p in env.players.items():
        table.add_row([name, f"player ({p.operator.name})",
                       f"{render_ports(p.observe)} -> {render_ports(p.choice)} feedback {render_ports(p.feedback)}"])
    for name, typed in env.games.items():
        table.add_row([name, "game", typed.render_type()])
    click.echo(table)


def _execute(ctx: click.Context, runner, config: RunConfig) -> None:
    try:
        runner(config)
    except CommandFailed as e:
        logger.error(f"{config.command} 失败（退出码 {e.exit_code}）")
        click.echo(Fore.RED + f"❌ {e}", err=True)
        ctx.exit(e.exit_code)


# ========== 命令行入口 ==========
@click.group()
@click.option("--verbose", is_flag=True, help="输出DEBUG级别日志")
@click.pass_context
def cli(ctx, verbose):
    """前博弈工具：检查 .pregame 文件、枚举均衡、运行定律检查、渲染弦图"""
    _configure_logging(verbose)
    ctx.ensure_object(dict)
    try:
        resolve_cap(DEFAULT_ENUMERATION_CAP)
    except ValueError as e:
        click.echo(Fore.RED + f"❌ {e}", err=True)
        ctx.exit(EXIT_USAGE)


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def check(ctx, path):
    """检查文件并打印每个博弈的接口"""
    _execute(ctx, run_check, RunConfig("check", path=path))


@cli.command(name="equilibria")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--game", required=True, help="博弈名")
@click.option("--format", "output_format", type=click.Choice(["text", "json"]), default="text", help="输出格式")
@click.option("--cap", type=click.IntRange(min=1), default=None, help="策略组合枚举上限")
@click.pass_context
def equilibria_command(ctx, path, game, output_format, cap):
    """枚举闭合博弈的全部均衡"""
    _execute(ctx, run_equilibria, RunConfig("equilibria", path=path, game=game,
                                            output_format=output_format, cap=cap))


@cli.command()
@click.option("--seed", type=click.IntRange(min=0), default=DEFAULT_SEED, show_default=True, help="随机种子")
@click.option("--iters", type=click.IntRange(min=1), default=DEFAULT_ITERATIONS, show_default=True,
              help="每条随机定律的实例数")
@click.option("--cap", type=click.IntRange(min=1), default=None, help="外延比较规模上限")
@click.pass_context
def laws(ctx, seed, iters, cap):
    """运行范畴定律、对称幺半结构与目的论自然性检查"""
    _execute(ctx, run_laws_command, RunConfig("laws", seed=seed, iterations=iters, cap=cap))


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--game", required=True, help="博弈名")
@click.option("-o", "--output", default=None, help="输出的 .dot 文件（缺省写到标准输出）")
@click.pass_context
def render(ctx, path, game, output):
    """把博弈渲染成 DOT 弦图"""
    _execute(ctx, run_render, RunConfig("render", path=path, game=game, output_format="dot", output=output))


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def info(ctx, path):
    """列出文件中声明的集合、函数、参与者与博弈"""
    _execute(ctx, run_info, RunConfig("info", path=path))


if __name__ == "__main__":
    cli(prog_name="pregame")
