"""Convert a LaTeX formula fragment to the gf grammar (explicit '*')."""
import re
import sys

def tokenize(s):
    s = s.replace('\\bigl', '').replace('\\bigr', '').replace('\\left', '').replace('\\right', '')
    s = s.replace('\\\\', ' ').replace('&', ' ').replace('\\medskip', '').replace('\\notag', '')
    s = s.replace('\\,', ' ')
    toks = []
    i = 0
    while i < len(s):
        c = s[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            toks.append(('num', s[i:j])); i = j
        elif c == '\\':
            j = i + 1
            while j < len(s) and s[j].isalpha():
                j += 1
            toks.append(('cmd', s[i+1:j])); i = j
        elif c.isalpha():
            toks.append(('var', c)); i += 1
        else:
            toks.append(('op', c)); i += 1
    return toks

class P:
    def __init__(self, toks):
        self.t = toks; self.i = 0
    def peek(self):
        return self.t[self.i] if self.i < len(self.t) else (None, None)
    def take(self):
        tok = self.t[self.i]; self.i += 1; return tok
    def expect(self, v):
        k, x = self.take()
        assert x == v, (v, k, x, self.t[self.i-5:self.i+5])
    def group(self):
        # {...} or single token
        k, x = self.peek()
        if x == '{':
            self.take()
            e = self.expr(stop='}')
            self.expect('}')
            return e
        if k == 'num':
            self.take(); return x
        return self.atom()
    def expr(self, stop=None):
        parts = []
        while True:
            k, x = self.peek()
            if k is None or x == stop or x in (')', '}', ']', ',', '='):
                break
            if x in ('+', '-'):
                self.take(); parts.append(' %s ' % x); continue
            parts.append(self.product())
        return ''.join(parts)
    def product(self):
        factors = [self.power()]
        while True:
            k, x = self.peek()
            if k is None or x in ('+', '-', ')', '}', ']', ',', '='):
                break
            factors.append(self.power())
        return '*'.join(factors)
    def power(self):
        base = self.atom()
        k, x = self.peek()
        if x == '^':
            self.take()
            e = self.group()
            base = base + '^' + e
        return base
    def atom(self):
        k, x = self.take()
        if k == 'num':
            return x
        if k == 'var':
            if x in 'trb' and self.peek()[1] in ('(', '_'):
                if x == 'b':
                    self.expect('_'); _, idx = self.take(); return '@b' + idx
                self.expect('(')
                arg = self.expr(stop=')')
                self.expect(')')
                name = 't' if x == 't' else 'r'
                if arg.replace(' ', '') == 'x':
                    return '@' + name
                return '@%s[x=%s]' % (name, arg)
            return x
        if k == 'op' and x == '(':
            e = self.expr(stop=')')
            self.expect(')')
            return '(' + e + ')'
        if k == 'op' and x == '{':
            e = self.expr(stop='}')
            self.expect('}')
            return '(' + e + ')'
        if k == 'cmd':
            if x == 'frac':
                a = self.group(); b = self.group()
                return '(%s)/(%s)' % (a, b)
            if x == 'sqrt':
                a = self.group()
                return 'sqrt(%s)' % a
            if x == 'alpha':
                return '@alpha'
        raise SystemExit('bad token %r %r at %d: %r' % (k, x, self.i, self.t[self.i-5:self.i+5]))

def convert(s):
    p = P(tokenize(s))
    e = p.expr()
    assert p.i == len(p.t), p.t[p.i:p.i+10]
    return re.sub(' +', ' ', e).strip()

if __name__ == '__main__':
    print(convert(sys.stdin.read()))
