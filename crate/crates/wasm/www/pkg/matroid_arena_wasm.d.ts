/* tslint:disable */
/* eslint-disable */

/**
 * A game with the page as Bob and the engine as Alice, every list of
 * size `k`.
 */
export class Duel {
    free(): void;
    [Symbol.dispose](): void;
    hint(): string;
    constructor(spec: string, k: number);
    reveal(v: string): string;
    state(): string;
}

export function catalog(): string;

export function chromatic(spec: string): string;

export function exchange(spec: string, request: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_duel_free: (a: number, b: number) => void;
    readonly catalog: () => [number, number, number, number];
    readonly chromatic: (a: number, b: number) => [number, number, number, number];
    readonly duel_hint: (a: number) => [number, number, number, number];
    readonly duel_new: (a: number, b: number, c: number) => [number, number, number];
    readonly duel_reveal: (a: number, b: number, c: number) => [number, number, number, number];
    readonly duel_state: (a: number) => [number, number, number, number];
    readonly exchange: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
