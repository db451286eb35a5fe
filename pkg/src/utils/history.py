"""Verify Run History"""

import json
import logging
import os
from datetime import datetime

from config.settings import TABLE_WIDTH, VERIFY_HISTORY_FILE

logger = logging.getLogger(__name__)


def load_verify_history(path=VERIFY_HISTORY_FILE):
    """Load verify run history from file"""
    if os.path.exists(path):
        try:
            with open(path, 'r') as f:
                return json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            logger.error("could not load verify history: %s", e)
            return []
    return []


def save_verify_run(run_data, path=VERIFY_HISTORY_FILE):
    """Append a verify run to the history file"""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)

    history = load_verify_history(path)
    run_data['timestamp'] = datetime.now().isoformat()
    run_data['id'] = len(history) + 1
    history.append(run_data)

    try:
        with open(path, 'w') as f:
            json.dump(history, f, indent=2)
        logger.info("verify run %d saved to history", run_data['id'])
    except OSError as e:
        logger.error("could not save verify history: %s", e)
    return run_data


def format_verify_history(path=VERIFY_HISTORY_FILE, limit=20, runs=None):
    """Table of the most recent verify runs, or of ``runs`` when given"""
    history = load_verify_history(path) if runs is None else runs
    if not history:
        return "📭 No verify history found"

    lines = ["\n📚 Verify History:", "=" * TABLE_WIDTH,
             f"{'ID':<4} {'Date':<12} {'Suite':<16} {'Seeds':<7} {'Base':<6} "
             f"{'Instances':<10} {'Failures':<9} {'Status':<6}",
             "-" * TABLE_WIDTH]
    for run in history[-limit:]:
        status = "✅" if run.get('passed') else "❌"
        lines.append(f"{run['id']:<4} {run['timestamp'][:10]:<12} {run.get('suite', 'N/A'):<16} "
                     f"{str(run.get('seeds', 'N/A')):<7} {run.get('base_seed', 0):<6} "
                     f"{run.get('instances', 0):<10} {run.get('failures', 0):<9} {status:<6}")
    lines.append("=" * TABLE_WIDTH)
    return "\n".join(lines)


def search_verify_runs(suite=None, passed=None, path=VERIFY_HISTORY_FILE):
    """Search verify runs by criteria"""
    filtered = load_verify_history(path)
    if suite:
        filtered = [r for r in filtered if r.get('suite') == suite]
    if passed is not None:
        filtered = [r for r in filtered if bool(r.get('passed')) == passed]
    return filtered


def get_verify_statistics(path=VERIFY_HISTORY_FILE):
    """Basic statistics about verify history"""
    history = load_verify_history(path)
    if not history:
        return {}

    stats = {
        'total_runs': len(history),
        'passed': 0,
        'failed': 0,
        'suites': {},
        'failing_seeds': {},
    }
    for run in history:
        stats['passed' if run.get('passed') else 'failed'] += 1
        suite = run.get('suite', 'unknown')
        stats['suites'][suite] = stats['suites'].get(suite, 0) + 1
        for failure in run.get('failed_instances', []):
            stats['failing_seeds'].setdefault(failure['suite'], set()).add(failure['instance'])

    stats['failing_seeds'] = {k: sorted(v) for k, v in stats['failing_seeds'].items()}
    return stats


def format_verify_statistics(path=VERIFY_HISTORY_FILE):
    """Pass/fail totals per suite and the instances that have failed"""
    stats = get_verify_statistics(path)
    if not stats:
        return "📭 No verify history found"

    lines = ["\n📊 Verify Statistics:", "=" * TABLE_WIDTH,
             f"Runs: {stats['total_runs']}   Passed: {stats['passed']}   Failed: {stats['failed']}",
             "-" * TABLE_WIDTH]
    for suite, count in sorted(stats['suites'].items()):
        lines.append(f"{suite:<16} {count} run(s)")
    for suite, instances in sorted(stats['failing_seeds'].items()):
        lines.append(f"❌ {suite}: {', '.join(instances)}")
    lines.append("=" * TABLE_WIDTH)
    return "\n".join(lines)
