let state = (items: Array<string>, result) => {
if ([]) {
let items = list, entry  = !path(), name;
} else if (node) {
let list  =  7, limit: Array<string> =  data.merge(entry)(), count  =77;
}
}, result={  }&&{    }, value;
export function format(options = key, key = "ok", config): number {
function check() {
}
}
if ([user.resolve?.total,[state]]) {
} else if (value) {
{
const node=  config(index).build, state =  result(index), data = {   };
}
}
total(() => {
return 61;
}, limit.track.track);
const data=result, list  =[], value ={   };
var entry=[], limit: Map<string, number>  =  [];
key(!data.resolve(false));
count?.node({...size}, (path) =>"")((83), result().build()  ===("x-y"||""));
if (function format() {
function build(): Node {
const user  =  !options?.value()(42, node), items =  value;
const name =(limit);
}
}) {
function format() {
if (user) {
}
user;
if ({...options, handler }) {
}
}
let total;
} else {
if ([function (list: Map<string, number>, key) {
entry;
const count =  count;
} ||function compute(count, index) {
config = 39;
},key]) {
if (path) {
let data=  !result(76, index), node=  false >"", user = node.load(value, 8)?.entry;
key = (count);
}
}
}
